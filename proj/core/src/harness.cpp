#include "singquad/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "singquad/corrections.hpp"
#include "singquad/errors.hpp"
#include "singquad/format.hpp"
#include "singquad/oracle.hpp"
#include "singquad/rules.hpp"

namespace singquad {

double observed_order(double E_i, double E_next, double n_i, double n_next) {
  if (!(E_i > 0.0 && E_next > 0.0 && n_i > 0.0 && n_next > 0.0)) {
    throw InvalidArgumentError("observed_order: all arguments must be positive");
  }
  return std::log(E_i / E_next) / std::log(n_next / n_i);
}

std::vector<std::size_t> default_interval_counts(int degree, int first_exponent,
                                                 int levels) {
  if (levels < 1 || first_exponent < 2) {
    throw InvalidArgumentError("default_interval_counts: bad schedule");
  }
  std::vector<std::size_t> counts;
  counts.reserve(static_cast<std::size_t>(levels));
  for (int i = first_exponent; i < first_exponent + levels; ++i) {
    const std::size_t p = std::size_t{1} << i;
    counts.push_back(degree == 3 ? 3 * (p / 3) : p);
  }
  return counts;
}

namespace {

std::vector<double> sample(const PiecewiseFunction& pf, const UniformGrid& grid) {
  std::vector<double> values(grid.m + 1);
  for (std::size_t i = 0; i <= grid.m; ++i) values[i] = pf.eval(grid.node(i));
  return values;
}

/// Attach order and floor annotations once the raw rows exist. The order
/// cell of row i compares it against row i-1.
void annotate(RefinementReport& report) {
  // The floor threshold is anchored to the coarsest level's exact value so
  // that rows whose error is pure accumulation noise are marked even when
  // the integration domain (and with it the exact value) shrinks.
  double exact_scale = 0.0;
  for (const RefinementRow& row : report.rows) {
    exact_scale = std::max(exact_scale, std::abs(row.exact));
  }
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    RefinementRow& row = report.rows[i];
    const double floor_scale = 1e-15 * exact_scale;
    row.floor_classical = row.error_classical <= floor_scale;
    row.floor_corrected = row.error_corrected <= floor_scale;
    if (i == 0) continue;
    const RefinementRow& prev = report.rows[i - 1];
    const double n_prev = 1.0 / prev.h;
    const double n_cur = 1.0 / row.h;
    if (prev.error_classical > 0.0 && row.error_classical > 0.0) {
      row.order_classical =
          observed_order(prev.error_classical, row.error_classical, n_prev, n_cur);
    }
    if (prev.error_corrected > 0.0 && row.error_corrected > 0.0) {
      row.order_corrected =
          observed_order(prev.error_corrected, row.error_corrected, n_prev, n_cur);
    }
  }
}

RefinementRow run_level(const RuleSpec& rule, const UniformGrid& grid, double b) {
  const PiecewiseFunction pf = paper_test_function(grid.a, b, grid.right());
  const SampleSet samples{grid, sample(pf, grid)};
  const SingularitySpec spec = pf.singularity(static_cast<std::size_t>(rule.degree));
  const std::vector<SingularitySpec> specs{spec};

  RefinementRow row;
  row.n = grid.m;
  row.h = grid.h;
  row.exact = exact_integral(pf, grid.a, grid.right());
  row.error_classical = std::abs(composite_integral(rule, samples) - row.exact);
  row.error_corrected = std::abs(corrected_composite(rule, samples, specs) - row.exact);
  return row;
}

}  // namespace

RefinementReport run_simple_refinement(const SimpleExperimentConfig& cfg) {
  if (cfg.levels < 1) throw InvalidArgumentError("run_simple_refinement: levels < 1");
  if (!(cfg.d >= 0.0 && cfg.d <= 1.0)) {
    throw InvalidArgumentError("run_simple_refinement: d must lie in [0, 1]");
  }
  if (!(cfg.c > cfg.a)) throw InvalidArgumentError("run_simple_refinement: need c > a");
  const RuleSpec rule = rule_weights(cfg.degree);
  RefinementReport report;
  report.degree = cfg.degree;

  double c = cfg.c;
  for (int level = 1; level <= cfg.levels; ++level) {
    const UniformGrid grid = make_grid(cfg.a, c, rule.panel_intervals());
    const double b = cfg.a + (static_cast<double>(cfg.n_offset) + cfg.d) * grid.h;
    RefinementRow row = run_level(rule, grid, b);
    row.level = level;
    report.rows.push_back(row);
    c = cfg.a + (c - cfg.a) / 2.0;
  }
  annotate(report);
  return report;
}

RefinementReport run_composite_refinement(const CompositeExperimentConfig& cfg) {
  if (cfg.levels < 1) throw InvalidArgumentError("run_composite_refinement: levels < 1");
  if (!(cfg.d >= 0.0 && cfg.d <= 1.0)) {
    throw InvalidArgumentError("run_composite_refinement: d must lie in [0, 1]");
  }
  if (!(cfg.c > cfg.a)) throw InvalidArgumentError("run_composite_refinement: need c > a");
  const RuleSpec rule = rule_weights(cfg.degree);
  std::vector<std::size_t> counts = cfg.interval_counts;
  if (counts.empty()) {
    counts = default_interval_counts(cfg.degree, cfg.first_exponent, cfg.levels);
  }
  if (counts.size() != static_cast<std::size_t>(cfg.levels)) {
    throw InvalidArgumentError(
        "run_composite_refinement: interval_counts length must equal levels");
  }
  if (!cfg.b_override.empty() &&
      cfg.b_override.size() != static_cast<std::size_t>(cfg.levels)) {
    throw InvalidArgumentError(
        "run_composite_refinement: b_override length must equal levels");
  }

  RefinementReport report;
  report.degree = cfg.degree;
  for (int level = 1; level <= cfg.levels; ++level) {
    const std::size_t m = counts[static_cast<std::size_t>(level - 1)];
    if (m % rule.panel_intervals() != 0) {
      throw PanelMismatchError(
          "run_composite_refinement: interval count " + std::to_string(m) +
          " is not divisible by the panel size " +
          std::to_string(rule.panel_intervals()));
    }
    const UniformGrid grid = make_grid(cfg.a, cfg.c, m);
    const double b =
        cfg.b_override.empty()
            ? cfg.a + (static_cast<double>(cfg.n_offset) + cfg.d) * grid.h
            : cfg.b_override[static_cast<std::size_t>(level - 1)];
    RefinementRow row = run_level(rule, grid, b);
    row.level = level;
    report.rows.push_back(row);
  }
  annotate(report);
  return report;
}

namespace {

std::string format_error(double e) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6e", e);
  return buf;
}

std::string format_order_cell(const std::optional<double>& order, bool floor,
                              bool first_row) {
  if (first_row) return "";
  if (floor) return "floor";
  if (!order) return "";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.5f", *order);
  return buf;
}

}  // namespace

void write_csv(const RefinementReport& report, std::ostream& os) {
  os << "level,n,h,error_classical,order_classical,error_corrected,"
        "order_corrected\n";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const RefinementRow& r = report.rows[i];
    os << r.level << ',' << r.n << ',' << format_shortest(r.h) << ','
       << format_error(r.error_classical) << ','
       << format_order_cell(r.order_classical, r.floor_classical, i == 0) << ','
       << format_error(r.error_corrected) << ','
       << format_order_cell(r.order_corrected, r.floor_corrected, i == 0)
       << '\n';
  }
}

std::string to_csv(const RefinementReport& report) {
  std::ostringstream os;
  write_csv(report, os);
  return os.str();
}

void write_plot_data(const RefinementReport& report, std::ostream& classical_os,
                     std::ostream& corrected_os) {
  for (const RefinementRow& r : report.rows) {
    classical_os << format_shortest(r.h) << ' '
                 << format_error(r.error_classical) << '\n';
    corrected_os << format_shortest(r.h) << ' '
                 << format_error(r.error_corrected) << '\n';
  }
}

}  // namespace singquad
