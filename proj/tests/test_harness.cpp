#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "doctest.h"
#include "singquad/errors.hpp"
#include "singquad/harness.hpp"

using namespace singquad;

TEST_CASE("observed_order reproduces published estimates") {
  CHECK(observed_order(4.0, 1.0, 8.0, 16.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(observed_order(5.55384e-01, 2.87374e-01, 2.0, 4.0) ==
        doctest::Approx(0.95056).epsilon(1e-4));
  CHECK(observed_order(8.73231e-02, 8.36720e-03, 2.0, 4.0) ==
        doctest::Approx(3.3835).epsilon(1e-4));
  CHECK_THROWS_AS(observed_order(0.0, 1.0, 2.0, 4.0), InvalidArgumentError);
  CHECK_THROWS_AS(observed_order(1.0, -1.0, 2.0, 4.0), InvalidArgumentError);
}

TEST_CASE("simple refinement first levels match the frozen errors") {
  SimpleExperimentConfig cfg;
  cfg.levels = 3;

  cfg.degree = 1;
  auto r1 = run_simple_refinement(cfg);
  REQUIRE(r1.rows.size() == 3);
  CHECK(r1.rows[0].error_corrected == doctest::Approx(8.73231e-02).epsilon(5e-5));
  CHECK(r1.rows[1].error_corrected == doctest::Approx(8.36720e-03).epsilon(5e-5));
  CHECK(r1.rows[0].error_classical == doctest::Approx(5.55384e-01).epsilon(5e-5));
  CHECK_FALSE(r1.rows[0].order_corrected.has_value());
  CHECK(r1.rows[1].order_corrected.value() == doctest::Approx(3.3835).epsilon(1e-3));

  cfg.degree = 2;
  auto r2 = run_simple_refinement(cfg);
  CHECK(r2.rows[0].error_corrected == doctest::Approx(3.64440e-04).epsilon(5e-5));

  cfg.degree = 3;
  auto r3 = run_simple_refinement(cfg);
  CHECK(r3.rows[0].error_corrected == doctest::Approx(3.23113e-04).epsilon(5e-5));
}

TEST_CASE("reports are deterministic") {
  SimpleExperimentConfig cfg;
  cfg.levels = 6;
  cfg.degree = 2;
  const auto a = run_simple_refinement(cfg);
  const auto b = run_simple_refinement(cfg);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].error_classical == b.rows[i].error_classical);
    CHECK(a.rows[i].error_corrected == b.rows[i].error_corrected);
  }
  CHECK(to_csv(a) == to_csv(b));
}

TEST_CASE("csv format: header, first-row order cells, floor marker") {
  SimpleExperimentConfig cfg;
  cfg.levels = 10;
  cfg.degree = 3;
  const auto report = run_simple_refinement(cfg);
  const std::string csv = to_csv(report);
  CHECK(csv.rfind("level,n,h,error_classical,order_classical,error_corrected,"
                  "order_corrected\n",
                  0) == 0);
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);  // header
  std::getline(is, line);  // first data row
  CHECK(line.substr(line.size() - 1) == ",");  // empty trailing order cell
  // Deep levels of the corrected 3/8 rule hit the roundoff floor.
  CHECK(csv.find("floor") != std::string::npos);
}

TEST_CASE("composite refinement respects panel compatibility") {
  CompositeExperimentConfig cfg;
  cfg.degree = 3;
  cfg.levels = 2;
  const auto counts = default_interval_counts(3, 4, 2);
  CHECK(counts[0] % 3 == 0);
  CHECK(counts[1] % 3 == 0);
  CHECK_NOTHROW(run_composite_refinement(cfg));

  cfg.interval_counts = {15};  // wrong length for two levels
  CHECK_THROWS_AS(run_composite_refinement(cfg), InvalidArgumentError);
  cfg.interval_counts = {15, 31};  // 31 not divisible by 3
  CHECK_THROWS_AS(run_composite_refinement(cfg), PanelMismatchError);
}

TEST_CASE("composite corrected trapezoid error ratio approaches 4") {
  CompositeExperimentConfig cfg;
  cfg.degree = 1;
  cfg.levels = 6;
  const auto report = run_composite_refinement(cfg);
  const auto& rows = report.rows;
  const double ratio = rows[4].error_corrected / rows[5].error_corrected;
  CHECK(ratio == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("plot data emission carries one (h, error) pair per level") {
  SimpleExperimentConfig cfg;
  cfg.levels = 4;
  const auto report = run_simple_refinement(cfg);
  std::ostringstream cls, cor;
  write_plot_data(report, cls, cor);
  auto count_lines = [](const std::string& s) {
    return std::count(s.begin(), s.end(), '\n');
  };
  CHECK(count_lines(cls.str()) == 4);
  CHECK(count_lines(cor.str()) == 4);
}
