#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "singquad/grid.hpp"
#include "singquad/polynomial.hpp"
#include "singquad/rules.hpp"

namespace singquad {

/// Which panel node the correction's alpha argument is measured from.
enum class AlphaConvention { FromLeftNode, FromRightNode };

/// Correction term C_{n,j} for a degree-n rule with the singularity in the
/// j-th interval of the panel (1-based). Stored per jump order k as a
/// polynomial P_k in the normalized offset a = alpha/h; the physical term
/// is homogeneous, [f^(k)] * h^(k+1) * P_k(alpha/h). The corrected
/// integral is classical - C.
class CorrectionPolynomial {
 public:
  CorrectionPolynomial(int degree, int variant, AlphaConvention convention,
                       std::vector<RationalPoly> per_jump)
      : degree_(degree),
        variant_(variant),
        convention_(convention),
        per_jump_(std::move(per_jump)) {}

  int degree() const { return degree_; }
  int variant() const { return variant_; }
  AlphaConvention alpha_convention() const { return convention_; }

  /// P_k as a polynomial in a = alpha/h; k in 0..degree.
  const RationalPoly& jump_term(std::size_t k) const { return per_jump_.at(k); }

  /// Coefficient of alpha^m h^(k+1-m) in the jump-order-k term.
  Rational bivariate_coeff(std::size_t k, std::size_t alpha_power) const {
    return per_jump_.at(k).coeff(alpha_power);
  }

  /// C(h, alpha, jumps); jumps beyond order degree are ignored.
  double evaluate(double h, double alpha, std::span<const double> jumps) const;

 private:
  int degree_;
  int variant_;
  AlphaConvention convention_;
  std::vector<RationalPoly> per_jump_;
};

/// Truncated Taylor sum of jumps converting a minus-side extension value at
/// x into the plus-side value: sum_{k<=K} jumps[k] (x - x*)^k / k!.
double taylor_jump_shift(const SingularitySpec& spec, double x, std::size_t K);

/// Convention used for variant j of a degree-n rule: alpha is measured from
/// the left node of the containing interval for the first ceil(n/2)
/// variants, from the right node otherwise.
AlphaConvention variant_convention(int n, int j);

/// Constructive correction-term generator: Lagrange basis on the panel
/// nodes, jump-shift substitution at each node, exact integration of the
/// jump-carrying residual on each side of x*. Results are memoized; the
/// returned reference stays valid for the process lifetime.
const CorrectionPolynomial& generate_correction(int n, int j);

/// Evaluate the verified closed form for (n, j). The shipped closed forms
/// are the generator's output; where the published table disagrees, the
/// erratum report records it.
double closed_form_correction(int n, int j, double h, double alpha,
                              const SingularitySpec& spec);

struct VariantSelection {
  int variant = 1;
  double alpha = 0.0;
  AlphaConvention convention = AlphaConvention::FromLeftNode;
};

VariantSelection select_variant(const RuleSpec& rule, const UniformGrid& grid,
                                const SingularityLocation& loc);

double corrected_simple(const RuleSpec& rule, double h,
                        std::span<const double> panel_values,
                        double panel_origin, const SingularitySpec& spec,
                        double node_tol = kDefaultNodeTol);

double corrected_composite(const RuleSpec& rule, const SampleSet& samples,
                           std::span<const SingularitySpec> specs,
                           double node_tol = kDefaultNodeTol);

/// Sum of the panel corrections for all singularities; the quantity the
/// corrected operators subtract from the classical integral.
double total_correction(const RuleSpec& rule, const UniformGrid& grid,
                        std::span<const SingularitySpec> specs,
                        double node_tol = kDefaultNodeTol);

/// Post-processing form: identical to corrected_composite when
/// classical_integral equals composite_integral(samples), bitwise.
double correct_precomputed(double classical_integral, const RuleSpec& rule,
                           const UniformGrid& grid,
                           std::span<const SingularitySpec> specs,
                           double node_tol = kDefaultNodeTol);

/// The four error-constant integrals of the general correction result for
/// normalized singularity offset s in (0, n), computed by exact polynomial
/// antidifferentiation. Exact rationals kept alongside the double values.
struct ErrorConstants {
  int n = 1;
  double s = 0.0;
  std::array<double, 4> c{};
  std::array<Rational, 4> c_exact{};
};

ErrorConstants error_constants(int n, double s);

/// Per-side bounds on |f^(n+1)| needed by error_bound.
struct DerivativeBounds {
  double left = 0.0;   // max |f^(n+1)| on the minus side of the panel
  double right = 0.0;  // max |f^(n+1)| on the plus side of the panel
};

/// Rigorous upper bound on |corrected simple integral - exact| for one
/// panel with the singularity in interval j at distance alpha from that
/// interval's left node (pass j = 0 for a smooth panel).
double error_bound(int n, int j, double h, double alpha,
                   const DerivativeBounds& bounds);

}  // namespace singquad
