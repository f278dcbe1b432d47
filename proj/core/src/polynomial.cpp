#include "singquad/polynomial.hpp"

#include <algorithm>

namespace singquad {

void RationalPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
  return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
  return *this + (o * Rational(-1));
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
  if (c_.empty() || o.c_.empty()) return {};
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator*(const Rational& s) const {
  std::vector<Rational> r(c_);
  for (auto& v : r) v *= s;
  return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::antiderivative() const {
  std::vector<Rational> r(c_.size() + 1, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k)
    r[k + 1] = c_[k] / Rational(k + 1);
  return RationalPoly(std::move(r));
}

Rational RationalPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + to_double(*it);
  return acc;
}

RationalPoly RationalPoly::substitute_linear(const Rational& p,
                                             const Rational& q) const {
  RationalPoly result;
  const RationalPoly arg({p, q});
  // Horner over the coefficient list.
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    result = result * arg + RationalPoly::constant(*it);
  return result;
}

RationalPoly lagrange_basis(int n, int i) {
  RationalPoly num = RationalPoly::constant(Rational(1));
  Rational den(1);
  for (int j = 0; j <= n; ++j) {
    if (j == i) continue;
    num = num * RationalPoly({Rational(-j), Rational(1)});
    den *= Rational(i - j);
  }
  return num * (Rational(1) / den);
}

RationalPoly nodal_polynomial(int n) {
  RationalPoly p = RationalPoly::x();
  for (int j = 1; j <= n; ++j)
    p = p * RationalPoly({Rational(-j), Rational(1)});
  return p;
}

}  // namespace singquad
