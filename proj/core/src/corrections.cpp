#include "singquad/corrections.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "singquad/errors.hpp"

namespace singquad {

namespace {

void check_degree(int n) {
  if (n < 1 || n > 4) {
    throw UnsupportedDegreeError("correction degree " + std::to_string(n) +
                                 " not in {1, 2, 3, 4}");
  }
}

void check_variant(int n, int j) {
  check_degree(n);
  if (j < 1 || j > n) {
    throw InvalidArgumentError("correction variant " + std::to_string(j) +
                               " not in 1.." + std::to_string(n));
  }
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

/// Build C_{n,j} in normalized units: panel nodes at 0..n, x* = (j-1) + a
/// with a the formal offset symbol. Plus-side node terms f~_i L_i are
/// integrated over [0, x*], minus-side terms -f~_i L_i over [x*, n]; the
/// substitution f_i^- = f_i^+ - f~_i fixes the signs.
CorrectionPolynomial build_correction(int n, int j) {
  const Rational left_node(j - 1);
  // x* as a polynomial in a.
  const RationalPoly xstar({left_node, Rational(1)});

  std::vector<RationalPoly> per_jump(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const RationalPoly anti = lagrange_basis(n, i).antiderivative();
    const RationalPoly anti_at_xstar = anti.substitute_linear(left_node, 1);
    RationalPoly weight;  // signed integral of L_i over this node's range
    if (i >= j) {
      weight = anti_at_xstar - RationalPoly::constant(anti.eval(Rational(0)));
    } else {
      weight = -(RationalPoly::constant(anti.eval(Rational(n))) - anti_at_xstar);
    }
    // (x_i - x*)^k / k! as a polynomial in a.
    RationalPoly offset_pow = RationalPoly::constant(Rational(1));
    const RationalPoly offset({Rational(i) - left_node, Rational(-1)});
    Rational inv_fact(1);
    for (int k = 0; k <= n; ++k) {
      if (k > 0) {
        offset_pow = offset_pow * offset;
        inv_fact /= Rational(k);
      }
      per_jump[static_cast<std::size_t>(k)] =
          per_jump[static_cast<std::size_t>(k)] +
          weight * offset_pow * inv_fact;
    }
  }

  const AlphaConvention conv = variant_convention(n, j);
  if (conv == AlphaConvention::FromRightNode) {
    for (auto& p : per_jump) p = p.substitute_linear(1, -1);  // a -> 1 - a
  }
  return CorrectionPolynomial(n, j, conv, std::move(per_jump));
}

const std::map<std::pair<int, int>, CorrectionPolynomial>& correction_table() {
  static const auto table = [] {
    std::map<std::pair<int, int>, CorrectionPolynomial> t;
    for (int n = 1; n <= 4; ++n)
      for (int j = 1; j <= n; ++j) t.emplace(std::pair{n, j}, build_correction(n, j));
    return t;
  }();
  return table;
}

}  // namespace

double CorrectionPolynomial::evaluate(double h, double alpha,
                                      std::span<const double> jumps) const {
  const double a = alpha / h;
  double hpow = h;  // h^(k+1)
  double acc = 0.0;
  const std::size_t kmax = std::min(per_jump_.size(), jumps.size());
  for (std::size_t k = 0; k < kmax; ++k) {
    acc += jumps[k] * hpow * per_jump_[k].eval(a);
    hpow *= h;
  }
  return acc;
}

double taylor_jump_shift(const SingularitySpec& spec, double x, std::size_t K) {
  if (spec.jumps.size() < K + 1) {
    throw MissingJumpsError("taylor_jump_shift: need jumps up to order " +
                            std::to_string(K) + ", have " +
                            std::to_string(spec.jumps.size()));
  }
  const double dx = x - spec.xstar;
  double term = 1.0;  // dx^k / k!
  double acc = 0.0;
  for (std::size_t k = 0; k <= K; ++k) {
    if (k > 0) term *= dx / static_cast<double>(k);
    acc += spec.jumps[k] * term;
  }
  return acc;
}

AlphaConvention variant_convention(int n, int j) {
  check_variant(n, j);
  return j <= (n + 1) / 2 ? AlphaConvention::FromLeftNode
                          : AlphaConvention::FromRightNode;
}

const CorrectionPolynomial& generate_correction(int n, int j) {
  check_variant(n, j);
  return correction_table().at({n, j});
}

double closed_form_correction(int n, int j, double h, double alpha,
                              const SingularitySpec& spec) {
  check_variant(n, j);
  if (!(alpha > 0.0) || !(alpha < h)) {
    throw OutOfRangeError("closed_form_correction: alpha must be in (0, h)");
  }
  if (spec.jumps.size() < static_cast<std::size_t>(n) + 1) {
    throw MissingJumpsError("closed_form_correction: degree " +
                            std::to_string(n) + " needs " +
                            std::to_string(n + 1) + " jump values, have " +
                            std::to_string(spec.jumps.size()));
  }
  return generate_correction(n, j).evaluate(h, alpha, spec.jumps);
}

VariantSelection select_variant(const RuleSpec& rule, const UniformGrid& grid,
                                const SingularityLocation& loc) {
  const auto n = rule.panel_intervals();
  if (loc.interval_index >= grid.m) {
    throw OutOfRangeError("select_variant: interval index out of grid");
  }
  VariantSelection sel;
  sel.variant = static_cast<int>(loc.interval_index % n) + 1;
  sel.convention = variant_convention(rule.degree, sel.variant);
  sel.alpha = sel.convention == AlphaConvention::FromLeftNode ? loc.alpha_left
                                                              : loc.alpha_right;
  return sel;
}

double corrected_simple(const RuleSpec& rule, double h,
                        std::span<const double> panel_values,
                        double panel_origin, const SingularitySpec& spec,
                        double node_tol) {
  const double classical = simple_integral(rule, h, panel_values);
  const UniformGrid panel{panel_origin, h, rule.panel_intervals()};
  const SingularityLocation loc = locate_singularity(panel, spec.xstar, node_tol);
  if (spec.jumps.size() < static_cast<std::size_t>(rule.degree) + 1) {
    throw MissingJumpsError("corrected_simple: degree " +
                            std::to_string(rule.degree) + " needs " +
                            std::to_string(rule.degree + 1) + " jump values");
  }
  const VariantSelection sel = select_variant(rule, panel, loc);
  const double c = generate_correction(rule.degree, sel.variant)
                       .evaluate(h, sel.alpha, spec.jumps);
  return classical - c;
}

double total_correction(const RuleSpec& rule, const UniformGrid& grid,
                        std::span<const SingularitySpec> specs,
                        double node_tol) {
  const auto n = rule.panel_intervals();
  if (grid.m % n != 0) {
    throw PanelMismatchError("total_correction: " + std::to_string(grid.m) +
                             " intervals not divisible by panel size " +
                             std::to_string(n));
  }
  std::set<std::size_t> occupied;
  double acc = 0.0;
  for (const auto& spec : specs) {
    if (spec.jumps.size() < static_cast<std::size_t>(rule.degree) + 1) {
      throw MissingJumpsError("total_correction: singularity at " +
                              std::to_string(spec.xstar) + " has " +
                              std::to_string(spec.jumps.size()) +
                              " jump values, degree " +
                              std::to_string(rule.degree) + " needs " +
                              std::to_string(rule.degree + 1));
    }
    const SingularityLocation loc = locate_singularity(grid, spec.xstar, node_tol);
    const std::size_t panel = loc.interval_index / n;
    if (!occupied.insert(panel).second) {
      throw TwoSingularitiesError(
          "total_correction: two singularities fall in panel " +
          std::to_string(panel));
    }
    const VariantSelection sel = select_variant(rule, grid, loc);
    acc += generate_correction(rule.degree, sel.variant)
               .evaluate(grid.h, sel.alpha, spec.jumps);
  }
  return acc;
}

double corrected_composite(const RuleSpec& rule, const SampleSet& samples,
                           std::span<const SingularitySpec> specs,
                           double node_tol) {
  const double classical = composite_integral(rule, samples);
  return classical - total_correction(rule, samples.grid, specs, node_tol);
}

double correct_precomputed(double classical_integral, const RuleSpec& rule,
                           const UniformGrid& grid,
                           std::span<const SingularitySpec> specs,
                           double node_tol) {
  return classical_integral - total_correction(rule, grid, specs, node_tol);
}

ErrorConstants error_constants(int n, double s) {
  check_degree(n);
  if (!(s > 0.0) || !(s <= static_cast<double>(n))) {
    throw OutOfRangeError("error_constants: s must be in (0, " +
                          std::to_string(n) + "]");
  }
  const Rational sr = rational_from_double(s);
  const RationalPoly omega = nodal_polynomial(n);
  const RationalPoly anti = omega.antiderivative();

  ErrorConstants ec;
  ec.n = n;
  ec.s = s;
  // c1 = int_0^s omega, c3 = int_s^n omega.
  ec.c_exact[0] = anti.eval(sr) - anti.eval(Rational(0));
  ec.c_exact[2] = anti.eval(Rational(n)) - anti.eval(sr);
  // c2 = int_0^s omega*(mu - s), c4 = int_s^n omega*(mu - n).
  const RationalPoly anti_shift_s =
      (omega * RationalPoly({-sr, Rational(1)})).antiderivative();
  const RationalPoly anti_shift_n =
      (omega * RationalPoly({Rational(-n), Rational(1)})).antiderivative();
  ec.c_exact[1] = anti_shift_s.eval(sr) - anti_shift_s.eval(Rational(0));
  ec.c_exact[3] = anti_shift_n.eval(Rational(n)) - anti_shift_n.eval(sr);
  for (int i = 0; i < 4; ++i) ec.c[i] = to_double(ec.c_exact[i]);
  return ec;
}

namespace {

/// Integral of |p| over [lo, hi] where p only changes sign at integers.
double integral_abs(const RationalPoly& p, double lo, double hi) {
  const RationalPoly anti = p.antiderivative();
  double acc = 0.0;
  double left = lo;
  for (double brk = std::floor(lo) + 1.0; brk < hi; brk += 1.0) {
    if (brk <= left) continue;
    acc += std::abs(anti.eval(brk) - anti.eval(left));
    left = brk;
  }
  acc += std::abs(anti.eval(hi) - anti.eval(left));
  return acc;
}

}  // namespace

double error_bound(int n, int j, double h, double alpha,
                   const DerivativeBounds& bounds) {
  check_degree(n);
  if (!(h > 0.0)) throw InvalidArgumentError("error_bound: h must be positive");
  const double fact = factorial(n + 1);
  const RationalPoly omega = nodal_polynomial(n);

  if (j == 0) {
    // Smooth panel: classical interpolation-error bound.
    const double bmax = std::max(bounds.left, bounds.right);
    return bmax / fact * std::pow(h, n + 2) *
           integral_abs(omega, 0.0, static_cast<double>(n));
  }
  check_variant(n, j);
  if (!(alpha > 0.0) || !(alpha < h)) {
    throw OutOfRangeError("error_bound: alpha must be in (0, h)");
  }
  const double s = static_cast<double>(j - 1) + alpha / h;
  const double hpow = std::pow(h, n + 2);

  // One-sided interpolation remainders of the smooth extensions.
  double bound = bounds.left / fact * hpow * integral_abs(omega, 0.0, s);
  bound += bounds.right / fact * hpow *
           integral_abs(omega, s, static_cast<double>(n));

  // Residual of truncating the jump shift at order n: Taylor remainders of
  // both one-sided extensions at each node, propagated through the exact
  // basis integrals used by the correction.
  const double resid_scale = (bounds.left + bounds.right) / fact;
  for (int i = 0; i <= n; ++i) {
    const RationalPoly anti = lagrange_basis(n, i).antiderivative();
    const double w = i >= j ? std::abs(anti.eval(s) - anti.eval(0.0))
                            : std::abs(anti.eval(static_cast<double>(n)) -
                                       anti.eval(s));
    const double dist = h * std::abs(static_cast<double>(i) - s);
    bound += w * h * resid_scale * std::pow(dist, n + 1);
  }
  return bound;
}

}  // namespace singquad
