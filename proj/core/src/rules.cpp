#include "singquad/rules.hpp"

#include <string>

#include "singquad/errors.hpp"

namespace singquad {

RuleSpec rule_weights(int n) {
  RuleSpec spec;
  spec.degree = n;
  switch (n) {
    case 1:
      spec.weights = {{1, 2}, {1, 2}};
      spec.smooth_order = 2;
      break;
    case 2:
      spec.weights = {{1, 3}, {4, 3}, {1, 3}};
      spec.smooth_order = 4;
      break;
    case 3:
      spec.weights = {{3, 8}, {9, 8}, {9, 8}, {3, 8}};
      spec.smooth_order = 4;
      break;
    case 4:
      spec.weights = {{14, 45}, {64, 45}, {24, 45}, {64, 45}, {14, 45}};
      spec.smooth_order = 6;
      break;
    default:
      throw UnsupportedDegreeError("rule_weights: degree " + std::to_string(n) +
                                   " not in {1, 2, 3, 4}");
  }
  spec.weights_f64.reserve(spec.weights.size());
  for (const auto& w : spec.weights) spec.weights_f64.push_back(to_double(w));
  return spec;
}

double simple_integral(const RuleSpec& rule, double h,
                       std::span<const double> panel_values) {
  if (panel_values.size() != rule.weights_f64.size()) {
    throw InvalidArgumentError("simple_integral: expected " +
                               std::to_string(rule.weights_f64.size()) +
                               " panel values, got " +
                               std::to_string(panel_values.size()));
  }
  if (!(h > 0.0)) {
    throw InvalidArgumentError("simple_integral: h must be positive");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < panel_values.size(); ++i) {
    acc += rule.weights_f64[i] * panel_values[i];
  }
  return h * acc;
}

double composite_integral(const RuleSpec& rule, const SampleSet& samples) {
  const auto n = rule.panel_intervals();
  const auto m = samples.grid.m;
  if (samples.values.size() != m + 1) {
    throw InvalidArgumentError("composite_integral: values length " +
                               std::to_string(samples.values.size()) +
                               " does not match m+1 = " + std::to_string(m + 1));
  }
  if (m % n != 0) {
    throw PanelMismatchError("composite_integral: " + std::to_string(m) +
                             " intervals not divisible by panel size " +
                             std::to_string(n));
  }
  CompensatedSum acc;
  std::span<const double> values(samples.values);
  for (std::size_t p = 0; p < m / n; ++p) {
    acc.add(simple_integral(rule, samples.grid.h, values.subspan(p * n, n + 1)));
  }
  return acc.result();
}

}  // namespace singquad
