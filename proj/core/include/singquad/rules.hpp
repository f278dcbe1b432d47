#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "singquad/grid.hpp"
#include "singquad/rational.hpp"

namespace singquad {

/// Neumaier-compensated accumulator. Composite sums over thousands of
/// panels must not pollute refinement studies whose errors bottom out
/// near 1e-15.
struct CompensatedSum {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double value) {
    const double t = sum + value;
    if (std::abs(sum) >= std::abs(value)) {
      compensation += (sum - t) + value;
    } else {
      compensation += (value - t) + sum;
    }
    sum = t;
  }
  double result() const { return sum + compensation; }
};

/// Closed Newton-Cotes rule of degree n: one panel spans n intervals and
/// the simple rule is h * sum w_i f_i.
struct RuleSpec {
  int degree = 1;
  std::vector<Rational> weights;        // exact, length degree+1
  std::vector<double> weights_f64;      // converted once at construction
  int smooth_order = 2;                 // global composite order

  std::size_t panel_intervals() const { return static_cast<std::size_t>(degree); }
};

/// Weights for degree n in {1, 2, 3, 4}: trapezoid, Simpson 1/3,
/// Simpson 3/8, Boole.
RuleSpec rule_weights(int n);

double simple_integral(const RuleSpec& rule, double h,
                       std::span<const double> panel_values);

double composite_integral(const RuleSpec& rule, const SampleSet& samples);

}  // namespace singquad
