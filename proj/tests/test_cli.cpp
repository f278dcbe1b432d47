#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "singquad/corrections.hpp"
#include "singquad/format.hpp"
#include "singquad/oracle.hpp"
#include "singquad/rules.hpp"

using namespace singquad;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string tmp = std::string(SINGQUAD_CLI_PATH) + ".out.tmp";
  const std::string cmd = (env.empty() ? "" : env + " ") +
                          std::string(SINGQUAD_CLI_PATH) + " " + args + " > " +
                          tmp + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  std::remove(tmp.c_str());
  return r;
}

std::string write_data_file(const SampleSet& s,
                            const std::vector<SingularitySpec>& specs,
                            const std::string& name) {
  const std::string path = std::string(SINGQUAD_CLI_PATH) + "." + name + ".json";
  std::ofstream os(path);
  os << "{\"grid\":{\"a\":" << format_shortest(s.grid.a)
     << ",\"h\":" << format_shortest(s.grid.h) << ",\"m\":" << s.grid.m
     << "},\"values\":[";
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    if (i) os << ',';
    os << format_shortest(s.values[i]);
  }
  os << "],\"singularities\":[";
  for (std::size_t k = 0; k < specs.size(); ++k) {
    if (k) os << ',';
    os << "{\"x\":" << format_shortest(specs[k].xstar) << ",\"jumps\":[";
    for (std::size_t j = 0; j < specs[k].jumps.size(); ++j) {
      if (j) os << ',';
      os << format_shortest(specs[k].jumps[j]);
    }
    os << "]}";
  }
  os << "]}";
  return path;
}

std::string extract(const std::string& out, const std::string& key) {
  const std::string tag = key + " = ";
  const auto pos = out.find(tag);
  REQUIRE(pos != std::string::npos);
  const auto end = out.find('\n', pos);
  return out.substr(pos + tag.size(), end - pos - tag.size());
}

}  // namespace

TEST_CASE("integrate: indicator example gives 3.5") {
  SampleSet s;
  s.grid = make_grid(0.0, 1.0, 10);
  for (std::size_t i = 0; i <= 10; ++i) {
    s.values.push_back(s.grid.node(i) < 0.3 ? 0.0 : 5.0);
  }
  const std::vector<SingularitySpec> specs{{0.3, {5.0, 0.0}}};
  const std::string path = write_data_file(s, specs, "indicator");
  // The double 0.3 sits ~4e-17 below the node 3*0.1, inside the default
  // collision band, so the documented example needs the tolerance override.
  const RunResult r =
      run_cli("integrate " + path + " --degree 1", "SINGQUAD_SEED_TOL=0");
  CHECK(r.exit_code == 0);
  CHECK(std::stod(extract(r.out, "corrected")) == doctest::Approx(3.5).epsilon(1e-14));
  std::remove(path.c_str());
}

TEST_CASE("integrate round-trips the in-process corrected value bitwise") {
  const PiecewiseFunction pf = paper_test_function(0.0, 0.4 / 12.0, 1.0);
  SampleSet s;
  s.grid = make_grid(0.0, 1.0, 12);
  for (std::size_t i = 0; i <= 12; ++i) s.values.push_back(pf.eval(s.grid.node(i)));
  const std::vector<SingularitySpec> specs{pf.singularity(2)};
  const std::string path = write_data_file(s, specs, "roundtrip");

  const RuleSpec rule = rule_weights(2);
  const double expected = corrected_composite(rule, s, specs);
  const RunResult r = run_cli("integrate " + path + " --degree 2");
  CHECK(r.exit_code == 0);
  // Round-trip formatting means the printed string parses back bitwise.
  CHECK(std::stod(extract(r.out, "corrected")) == expected);
  std::remove(path.c_str());
}

TEST_CASE("integrate --no-correction prints the classical value only") {
  SampleSet s;
  s.grid = make_grid(0.0, 1.0, 4);
  s.values = {1.0, 1.0, 1.0, 1.0, 1.0};
  const std::string path = write_data_file(s, {}, "flat");
  const RunResult r = run_cli("integrate " + path + " --degree 1 --no-correction");
  CHECK(r.exit_code == 0);
  CHECK(std::stod(extract(r.out, "classical")) == 1.0);
  CHECK(r.out.find("corrected") == std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("exit codes: parse, panel mismatch, node collision, missing jumps") {
  const std::string bad = std::string(SINGQUAD_CLI_PATH) + ".bad.json";
  {
    std::ofstream os(bad);
    os << "{not json";
  }
  CHECK(run_cli("integrate " + bad).exit_code == 2);
  std::remove(bad.c_str());

  CHECK(run_cli("nonsense-subcommand").exit_code == 2);

  SampleSet s;
  s.grid = make_grid(0.0, 1.0, 5);
  s.values.assign(6, 1.0);
  const std::string p3 = write_data_file(s, {{0.3, {1.0, 0.0, 0.0}}}, "panel");
  CHECK(run_cli("integrate " + p3 + " --degree 2").exit_code == 3);
  std::remove(p3.c_str());

  SampleSet s4;
  s4.grid = make_grid(0.0, 1.0, 4);
  s4.values.assign(5, 1.0);
  const std::string p4 = write_data_file(s4, {{0.25, {1.0, 0.0}}}, "node");
  CHECK(run_cli("integrate " + p4 + " --degree 1").exit_code == 4);
  std::remove(p4.c_str());

  const std::string p5 = write_data_file(s4, {{0.3, {1.0}}}, "jumps");
  CHECK(run_cli("integrate " + p5 + " --degree 1").exit_code == 5);
  std::remove(p5.c_str());
}

TEST_CASE("correct: post-processing matches the documented example") {
  const RunResult r = run_cli(
      "correct --value 0.5 --a 0 --h 1 --m 1 --degree 1 --x 0.4 --jumps 1 0");
  CHECK(r.exit_code == 0);
  CHECK(std::stod(r.out) == doctest::Approx(0.6).epsilon(1e-15));

  // Empty singularities echo the input value.
  const RunResult echo = run_cli("correct --value 0.5 --a 0 --h 1 --m 1");
  CHECK(echo.exit_code == 0);
  CHECK(std::stod(echo.out) == 0.5);

  const RunResult collide = run_cli(
      "correct --value 0.5 --a 0 --h 0.5 --m 2 --degree 1 --x 0.5 --jumps 1 0");
  CHECK(collide.exit_code == 4);
}

TEST_CASE("refine: csv header and first-row corrected error") {
  const RunResult r = run_cli("refine --mode simple --degree 1 --levels 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("level,n,h,error_classical,order_classical,error_corrected,"
                    "order_corrected\n",
                    0) == 0);
  CHECK(r.out.find("8.732") != std::string::npos);

  const RunResult one = run_cli("refine --mode simple --degree 1 --levels 1");
  std::istringstream is(one.out);
  std::string header, row;
  std::getline(is, header);
  std::getline(is, row);
  CHECK(row.back() == ',');  // empty order cells on a single row
}

TEST_CASE("constants subcommand prints c1..c4; s >= degree is a usage error") {
  const RunResult r = run_cli("constants --degree 1 --s 0.9999999999");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("c1 = ") != std::string::npos);
  CHECK(run_cli("constants --degree 1 --s 1.5").exit_code == 2);
}

TEST_CASE("errata subcommand prints the report") {
  const RunResult r = run_cli("errata");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("C_{2,1}: MISMATCH") != std::string::npos);
}

TEST_CASE("SINGQUAD_SEED_TOL environment override widens the collision band") {
  SampleSet s;
  s.grid = make_grid(0.0, 1.0, 4);
  s.values.assign(5, 1.0);
  const std::string path = write_data_file(s, {{0.26, {1.0, 0.0}}}, "tol");
  CHECK(run_cli("integrate " + path + " --degree 1").exit_code == 0);
  const std::string cmd = "SINGQUAD_SEED_TOL=0.1 " + std::string(SINGQUAD_CLI_PATH) +
                          " integrate " + path + " --degree 1 >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 4);
  std::remove(path.c_str());
}
