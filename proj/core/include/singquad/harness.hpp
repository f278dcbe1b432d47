#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace singquad {

/// Simple-rule refinement: one panel on [a, c], singularity at
/// b = a + (n_offset + d) h, interval halved between levels.
struct SimpleExperimentConfig {
  double a = 0.0;
  double c = 0.5;
  int n_offset = 0;
  double d = 0.4;
  int levels = 10;
  int degree = 1;
};

/// Composite refinement on [a, c]. Interval counts default to 2^i
/// (i = first_exponent..) rounded down to the nearest panel-compatible
/// count; both the counts and the per-level singularity abscissa can be
/// overridden.
struct CompositeExperimentConfig {
  double a = 0.0;
  double c = 1.0;
  int n_offset = 0;
  double d = 0.4;
  int levels = 10;
  int degree = 1;
  int first_exponent = 4;
  std::vector<std::size_t> interval_counts;  // empty -> default schedule
  std::vector<double> b_override;            // empty -> b = a + (n_offset+d) h
};

struct RefinementRow {
  int level = 1;
  std::size_t n = 1;  // resolution (interval count)
  double h = 0.0;
  double exact = 0.0;
  double error_classical = 0.0;
  double error_corrected = 0.0;
  std::optional<double> order_classical;  // empty on the first row
  std::optional<double> order_corrected;
  bool floor_classical = false;  // error at the roundoff floor
  bool floor_corrected = false;
};

struct RefinementReport {
  int degree = 1;
  std::vector<RefinementRow> rows;
};

/// Eq.-(40)-style estimate, ln(E_i/E_next) / ln(n_next/n_i); all
/// arguments must be positive.
double observed_order(double E_i, double E_next, double n_i, double n_next);

/// Default composite interval counts for the given degree:
/// 2^i for degrees 1, 2, 4 and 3*floor(2^i/3) for degree 3.
std::vector<std::size_t> default_interval_counts(int degree, int first_exponent,
                                                 int levels);

RefinementReport run_simple_refinement(const SimpleExperimentConfig& cfg);
RefinementReport run_composite_refinement(const CompositeExperimentConfig& cfg);

/// CSV with the fixed header
/// level,n,h,error_classical,order_classical,error_corrected,order_corrected
/// Errors in scientific notation with >= 6 significant digits; order cells
/// are empty on the first row and say "floor" at the roundoff floor.
void write_csv(const RefinementReport& report, std::ostream& os);
std::string to_csv(const RefinementReport& report);

/// Two-column (h, error) series for external plotting.
void write_plot_data(const RefinementReport& report, std::ostream& classical_os,
                     std::ostream& corrected_os);

}  // namespace singquad
