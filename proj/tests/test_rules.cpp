#include <cmath>
#include <vector>

#include "doctest.h"
#include "singquad/errors.hpp"
#include "singquad/rules.hpp"

using namespace singquad;

TEST_CASE("rule weights are the classical closed Newton-Cotes sets") {
  CHECK(rule_weights(1).weights == std::vector<Rational>{{1, 2}, {1, 2}});
  CHECK(rule_weights(2).weights ==
        std::vector<Rational>{{1, 3}, {4, 3}, {1, 3}});
  CHECK(rule_weights(3).weights ==
        std::vector<Rational>{{3, 8}, {9, 8}, {9, 8}, {3, 8}});
  CHECK(rule_weights(4).weights == std::vector<Rational>{{14, 45},
                                                         {64, 45},
                                                         {24, 45},
                                                         {64, 45},
                                                         {14, 45}});
  CHECK_THROWS_AS(rule_weights(0), UnsupportedDegreeError);
  CHECK_THROWS_AS(rule_weights(5), UnsupportedDegreeError);
}

TEST_CASE("weights integrate constants exactly (sum = degree)") {
  for (int n = 1; n <= 4; ++n) {
    Rational sum = 0;
    for (const Rational& w : rule_weights(n).weights) sum += w;
    CHECK(sum == Rational(n));
  }
}

namespace {
double poly_integral_error(int degree, int poly_degree, std::size_t m) {
  // Integrate x^p over [0.3, 1.7] with m intervals.
  const RuleSpec rule = rule_weights(degree);
  SampleSet s;
  s.grid = make_grid(0.3, 1.7, m);
  for (std::size_t i = 0; i <= m; ++i) {
    s.values.push_back(std::pow(s.grid.node(i), poly_degree));
  }
  const double exact = (std::pow(1.7, poly_degree + 1) -
                        std::pow(0.3, poly_degree + 1)) /
                       (poly_degree + 1);
  return std::abs(composite_integral(rule, s) - exact);
}
}  // namespace

TEST_CASE("degree exactness on polynomials") {
  // Trapezoid exact for linears, Simpson rules for cubics, Boole for x^5.
  CHECK(poly_integral_error(1, 1, 6) <= 1e-14);
  CHECK(poly_integral_error(2, 3, 6) <= 1e-14);
  CHECK(poly_integral_error(3, 3, 6) <= 1e-14);
  CHECK(poly_integral_error(4, 5, 8) <= 1e-13);
  // And not exact one degree higher.
  CHECK(poly_integral_error(1, 2, 6) > 1e-6);
  CHECK(poly_integral_error(2, 4, 6) > 1e-8);
}

TEST_CASE("simple rule matches hand computations") {
  const RuleSpec trap = rule_weights(1);
  const std::vector<double> v{2.0, 4.0};
  CHECK(simple_integral(trap, 0.5, v) == 1.5);

  const RuleSpec simpson = rule_weights(2);
  const std::vector<double> w{1.0, 2.0, 3.0};
  // h/3 (f0 + 4 f1 + f2) = (1 + 8 + 3)/3 with h = 1.
  CHECK(simple_integral(simpson, 1.0, w) == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("composite validates panel compatibility and lengths") {
  const RuleSpec simpson = rule_weights(2);
  SampleSet s;
  s.grid = make_grid(0.0, 1.0, 5);  // 5 intervals, not divisible by 2
  s.values.assign(6, 1.0);
  CHECK_THROWS_AS(composite_integral(simpson, s), PanelMismatchError);

  s.grid = make_grid(0.0, 1.0, 4);
  s.values.assign(4, 1.0);  // should be 5 values
  CHECK_THROWS_AS(composite_integral(simpson, s), InvalidArgumentError);
}

TEST_CASE("translation invariance") {
  for (int n = 1; n <= 4; ++n) {
    const RuleSpec rule = rule_weights(n);
    const std::size_t m = rule.panel_intervals() * 3;
    SampleSet s1, s2;
    s1.grid = make_grid(0.0, 1.0, m);
    s2.grid = make_grid(5.0, 6.0, m);
    for (std::size_t i = 0; i <= m; ++i) {
      const double y = std::sin(3.0 * s1.grid.node(i)) + 0.25;
      s1.values.push_back(y);
      s2.values.push_back(y);
    }
    CHECK(composite_integral(rule, s1) == composite_integral(rule, s2));
  }
}

TEST_CASE("compensated summation keeps long sums accurate") {
  CompensatedSum acc;
  const double tiny = 1e-16;
  acc.add(1.0);
  for (int i = 0; i < 100000; ++i) acc.add(tiny);
  CHECK(acc.result() == doctest::Approx(1.0 + 1e-11).epsilon(1e-14));
}
