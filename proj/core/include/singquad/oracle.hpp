#pragma once

#include <cstddef>
#include <vector>

#include "singquad/grid.hpp"

namespace singquad {

/// One trigonometric term A*sin(omega*x) or A*cos(omega*x), omega != 0.
struct TrigTerm {
  double amplitude = 0.0;
  double omega = 1.0;
  bool is_sin = true;
};

/// Registered analytic family: polynomial plus sin/cos terms. Small on
/// purpose — enough for every test in this project without building a
/// symbolic calculus.
class SmoothFn {
 public:
  SmoothFn() = default;

  static SmoothFn polynomial(std::vector<double> coeffs);
  static SmoothFn constant(double c) { return polynomial({c}); }

  SmoothFn& add_sin(double amplitude, double omega);
  SmoothFn& add_cos(double amplitude, double omega);

  double value(double x) const;
  /// k-th derivative at x (k = 0 is the value itself).
  double derivative(std::size_t k, double x) const;
  /// An antiderivative F with F' = value (integration constant 0).
  double antiderivative(double x) const;

 private:
  std::vector<double> poly_;  // sum_i poly_[i] x^i
  std::vector<TrigTerm> trig_;
};

/// Two smooth branches separated at xstar. Evaluation exactly at xstar is
/// disallowed (matches node-collision semantics).
struct PiecewiseFunction {
  SmoothFn left;
  SmoothFn right;
  double xstar = 0.0;

  double eval(double x) const;
  /// Analytic jump [f^(k)] = right^(k)(x*) - left^(k)(x*).
  double jump(std::size_t k) const;
  /// Jumps for k = 0..K inclusive.
  std::vector<double> jumps(std::size_t K) const;
  /// Convenience: a SingularitySpec carrying jumps up to order K.
  SingularitySpec singularity(std::size_t K) const;
};

/// The paper-style test case: cos(pi x) + 10 below b, sin(pi x) above.
PiecewiseFunction paper_test_function(double a, double b, double c);

/// Closed-form integral of pf over [a, c] from the analytic
/// antiderivatives, split at x* when x* lies inside.
double exact_integral(const PiecewiseFunction& pf, double a, double c);

/// Independent brute-force oracle: adaptive Gauss-Kronrod 15 applied
/// separately to each smooth piece. tol must be >= 1e-14; throws
/// ConvergenceError if the subdivision budget is exhausted.
double reference_integral(const PiecewiseFunction& pf, double a, double c,
                          double tol);

}  // namespace singquad
