#pragma once

#include <cstddef>
#include <vector>

#include "singquad/rational.hpp"

namespace singquad {

/// Dense univariate polynomial with exact rational coefficients,
/// coeffs[k] * x^k. Degrees here never exceed n+2 for n <= 4, so no
/// attempt is made at sparse or fast arithmetic.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  static RationalPoly constant(Rational v) { return RationalPoly({std::move(v)}); }
  /// The monomial x.
  static RationalPoly x() { return RationalPoly({Rational(0), Rational(1)}); }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  Rational coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : Rational(0);
  }

  RationalPoly operator+(const RationalPoly& o) const;
  RationalPoly operator-(const RationalPoly& o) const;
  RationalPoly operator*(const RationalPoly& o) const;
  RationalPoly operator*(const Rational& s) const;
  RationalPoly operator-() const { return *this * Rational(-1); }
  bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

  /// Antiderivative with zero constant term.
  RationalPoly antiderivative() const;

  Rational eval(const Rational& x) const;
  double eval(double x) const;

  /// Substitute x -> p + q*x.
  RationalPoly substitute_linear(const Rational& p, const Rational& q) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Lagrange basis polynomial L_i over the integer nodes {0, 1, ..., n}.
RationalPoly lagrange_basis(int n, int i);

/// The nodal polynomial x(x-1)...(x-n) over the integer nodes {0, ..., n}.
RationalPoly nodal_polynomial(int n);

}  // namespace singquad
