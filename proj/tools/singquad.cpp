#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "singquad/corrections.hpp"
#include "singquad/errata.hpp"
#include "singquad/errors.hpp"
#include "singquad/format.hpp"
#include "singquad/grid.hpp"
#include "singquad/harness.hpp"
#include "singquad/oracle.hpp"
#include "singquad/rules.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPanelMismatch = 3;
constexpr int kExitNodeCollision = 4;
constexpr int kExitMissingJumps = 5;

double node_tolerance() {
  if (const char* env = std::getenv("SINGQUAD_SEED_TOL")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw singquad::InvalidArgumentError(
          "SINGQUAD_SEED_TOL is not a valid number: " + std::string(env));
    }
  }
  return singquad::kDefaultNodeTol;
}

struct DataFile {
  singquad::SampleSet samples;
  std::vector<singquad::SingularitySpec> singularities;
};

DataFile load_data_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw singquad::InvalidArgumentError("cannot open input file '" + path + "'");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw singquad::InvalidArgumentError("JSON parse error in '" + path +
                                         "': " + e.what());
  }
  DataFile out;
  try {
    const auto& grid = j.at("grid");
    out.samples.grid.a = grid.at("a").get<double>();
    out.samples.grid.h = grid.at("h").get<double>();
    out.samples.grid.m = grid.at("m").get<std::size_t>();
    out.samples.values = j.at("values").get<std::vector<double>>();
    if (j.contains("singularities")) {
      for (const auto& s : j.at("singularities")) {
        singquad::SingularitySpec spec;
        spec.xstar = s.at("x").get<double>();
        spec.jumps = s.at("jumps").get<std::vector<double>>();
        out.singularities.push_back(std::move(spec));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw singquad::InvalidArgumentError("schema error in '" + path +
                                         "': " + e.what());
  }
  if (out.samples.values.size() != out.samples.grid.m + 1) {
    throw singquad::InvalidArgumentError(
        "schema error in '" + path + "': values has " +
        std::to_string(out.samples.values.size()) + " entries but grid.m = " +
        std::to_string(out.samples.grid.m) + " requires m+1");
  }
  return out;
}

int cmd_integrate(const std::string& input, int degree, bool no_correction,
                  const std::string& format) {
  const DataFile data = load_data_file(input);
  const singquad::RuleSpec rule = singquad::rule_weights(degree);
  const double classical = singquad::composite_integral(rule, data.samples);
  double correction = 0.0;
  if (!no_correction) {
    correction = singquad::total_correction(rule, data.samples.grid,
                                            data.singularities, node_tolerance());
  }
  const double corrected = classical - correction;
  using singquad::format_shortest;
  if (format == "csv") {
    if (no_correction) {
      std::cout << "classical\n" << format_shortest(classical) << "\n";
    } else {
      std::cout << "classical,correction,corrected\n"
                << format_shortest(classical) << ',' << format_shortest(correction)
                << ',' << format_shortest(corrected) << "\n";
    }
  } else {
    std::cout << "classical = " << format_shortest(classical) << "\n";
    if (!no_correction) {
      std::cout << "correction = " << format_shortest(correction) << "\n";
      std::cout << "corrected = " << format_shortest(corrected) << "\n";
    }
  }
  return 0;
}

int cmd_correct(double value, double a, double h, std::size_t m, int degree,
                const std::optional<double>& x, const std::vector<double>& jumps) {
  const singquad::RuleSpec rule = singquad::rule_weights(degree);
  const singquad::UniformGrid grid{a, h, m};
  std::vector<singquad::SingularitySpec> specs;
  if (x) specs.push_back({*x, jumps});
  const double corrected = singquad::correct_precomputed(value, rule, grid, specs,
                                                         node_tolerance());
  std::cout << singquad::format_shortest(corrected) << "\n";
  return 0;
}

int cmd_refine(const std::string& mode, int degree, int levels, double a,
               double c, double d, int n_offset, int first_exponent,
               const std::string& out, const std::string& format,
               const std::string& plot_prefix) {
  singquad::RefinementReport report;
  if (mode == "simple") {
    singquad::SimpleExperimentConfig cfg;
    cfg.a = a;
    cfg.c = c;
    cfg.d = d;
    cfg.n_offset = n_offset;
    cfg.levels = levels;
    cfg.degree = degree;
    report = singquad::run_simple_refinement(cfg);
  } else {
    singquad::CompositeExperimentConfig cfg;
    cfg.a = a;
    cfg.c = c;
    cfg.d = d;
    cfg.n_offset = n_offset;
    cfg.levels = levels;
    cfg.degree = degree;
    cfg.first_exponent = first_exponent;
    report = singquad::run_composite_refinement(cfg);
  }
  std::string text;
  if (format == "plain") {
    std::string csv = singquad::to_csv(report);
    for (char& ch : csv) {
      if (ch == ',') ch = ' ';
    }
    text = csv;
  } else {
    text = singquad::to_csv(report);
  }
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out);
    if (!os) {
      throw singquad::InvalidArgumentError("cannot open output file '" + out + "'");
    }
    os << text;
  }
  if (!plot_prefix.empty()) {
    std::ofstream cls(plot_prefix + "_classical.dat");
    std::ofstream cor(plot_prefix + "_corrected.dat");
    if (!cls || !cor) {
      throw singquad::InvalidArgumentError("cannot open plot-data files at prefix '" +
                                           plot_prefix + "'");
    }
    singquad::write_plot_data(report, cls, cor);
  }
  return 0;
}

int cmd_constants(int degree, double s) {
  const singquad::ErrorConstants ec = singquad::error_constants(degree, s);
  for (int i = 0; i < 4; ++i) {
    std::cout << "c" << (i + 1) << " = "
              << singquad::format_shortest(ec.c[static_cast<std::size_t>(i)])
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton-Cotes quadrature with singularity corrections"};
  app.require_subcommand(1);

  // integrate
  auto* integrate = app.add_subcommand(
      "integrate", "Integrate sampled data from a JSON data file");
  std::string in_path;
  int in_degree = 1;
  bool no_correction = false;
  std::string in_format = "plain";
  integrate->add_option("input", in_path, "JSON data file")->required();
  integrate->add_option("--degree", in_degree, "Rule degree")
      ->check(CLI::IsMember({1, 2, 3, 4}));
  integrate->add_flag("--no-correction", no_correction,
                      "Skip the singularity correction");
  integrate->add_option("--format", in_format, "Output format")
      ->check(CLI::IsMember({"csv", "plain"}));

  // correct
  auto* correct = app.add_subcommand(
      "correct", "Post-process a precomputed classical integral");
  double cr_value = 0.0, cr_a = 0.0, cr_h = 1.0;
  std::size_t cr_m = 1;
  int cr_degree = 1;
  std::optional<double> cr_x;
  std::vector<double> cr_jumps;
  // Free the short -h so the grid-spacing option can be spelled --h.
  correct->set_help_flag("--help", "Print help");
  correct->add_option("--value", cr_value, "Classical integral value")->required();
  correct->add_option("--a", cr_a, "Grid origin")->required();
  correct->add_option("--h", cr_h, "Grid spacing")->required();
  correct->add_option("--m", cr_m, "Interval count")->required();
  correct->add_option("--degree", cr_degree, "Rule degree")
      ->check(CLI::IsMember({1, 2, 3, 4}));
  correct->add_option("--x", cr_x, "Singularity abscissa");
  correct->add_option("--jumps", cr_jumps, "Jump values [f], [f'], ...")
      ->expected(-1);

  // refine
  auto* refine = app.add_subcommand(
      "refine", "Run a grid-refinement experiment and emit a report");
  std::string rf_mode = "simple";
  int rf_degree = 1, rf_levels = 10, rf_noffset = 0, rf_first_exp = 4;
  double rf_a = 0.0, rf_d = 0.4;
  std::optional<double> rf_c;
  std::string rf_out, rf_format = "csv", rf_plot;
  refine->add_option("--mode", rf_mode, "Experiment mode")
      ->check(CLI::IsMember({"simple", "composite"}));
  refine->add_option("--degree", rf_degree, "Rule degree")
      ->check(CLI::IsMember({1, 2, 3, 4}));
  refine->add_option("--levels", rf_levels, "Number of refinement levels");
  refine->add_option("--a", rf_a, "Left endpoint");
  refine->add_option("--c", rf_c, "Right endpoint (default 0.5 simple, 1 composite)");
  refine->add_option("--d", rf_d, "Normalized singularity offset d in [0, 1]");
  refine->add_option("--n-offset", rf_noffset, "Interval offset in b = (n+d)h");
  refine->add_option("--first-exponent", rf_first_exp,
                     "Composite mode: first 2^i interval exponent");
  refine->add_option("--out", rf_out, "Write the report to this path");
  refine->add_option("--format", rf_format, "Report format")
      ->check(CLI::IsMember({"csv", "plain"}));
  refine->add_option("--plot-prefix", rf_plot,
                     "Also write (h, error) plot data files at this prefix");

  // constants
  auto* constants = app.add_subcommand(
      "constants", "Print the correction error constants for (degree, s)");
  int ct_degree = 1;
  double ct_s = 0.5;
  constants->add_option("--degree", ct_degree, "Rule degree")
      ->check(CLI::IsMember({1, 2, 3, 4}));
  constants->add_option("--s", ct_s, "Normalized singularity position in (0, degree)")
      ->required();

  // errata
  auto* errata = app.add_subcommand(
      "errata", "Print the published-table vs generator erratum report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (integrate->parsed()) {
      return cmd_integrate(in_path, in_degree, no_correction, in_format);
    }
    if (correct->parsed()) {
      return cmd_correct(cr_value, cr_a, cr_h, cr_m, cr_degree, cr_x, cr_jumps);
    }
    if (refine->parsed()) {
      const double c = rf_c ? *rf_c : (rf_mode == "simple" ? 0.5 : 1.0);
      return cmd_refine(rf_mode, rf_degree, rf_levels, rf_a, c, rf_d, rf_noffset,
                        rf_first_exp, rf_out, rf_format, rf_plot);
    }
    if (constants->parsed()) {
      if (!(ct_s > 0.0 && ct_s < static_cast<double>(ct_degree))) {
        std::cerr << "parse error: --s must lie strictly inside (0, degree)\n";
        return kExitParse;
      }
      return cmd_constants(ct_degree, ct_s);
    }
    if (errata->parsed()) {
      std::cout << singquad::erratum_report();
      return 0;
    }
  } catch (const singquad::PanelMismatchError& e) {
    std::cerr << "panel mismatch: " << e.what() << "\n";
    return kExitPanelMismatch;
  } catch (const singquad::NodeCollisionError& e) {
    std::cerr << "node collision: " << e.what() << "\n";
    return kExitNodeCollision;
  } catch (const singquad::MissingJumpsError& e) {
    std::cerr << "missing jumps: " << e.what() << "\n";
    return kExitMissingJumps;
  } catch (const singquad::InvalidArgumentError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const singquad::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
