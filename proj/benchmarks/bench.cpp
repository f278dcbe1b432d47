#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "singquad/corrections.hpp"
#include "singquad/oracle.hpp"
#include "singquad/rules.hpp"

namespace {

singquad::SampleSet make_samples(std::size_t m) {
  const singquad::PiecewiseFunction pf =
      singquad::paper_test_function(0.0, 0.4 / static_cast<double>(m), 1.0);
  singquad::SampleSet s;
  s.grid = singquad::make_grid(0.0, 1.0, m);
  s.values.reserve(m + 1);
  for (std::size_t i = 0; i <= m; ++i) s.values.push_back(pf.eval(s.grid.node(i)));
  return s;
}

void BM_composite_integral(benchmark::State& state) {
  const auto rule = singquad::rule_weights(static_cast<int>(state.range(0)));
  const std::size_t m = 3 * 1024;  // divisible by every panel size
  const auto s = make_samples(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(singquad::composite_integral(rule, s));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(m));
}
BENCHMARK(BM_composite_integral)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void BM_corrected_composite(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const auto rule = singquad::rule_weights(degree);
  const std::size_t m = 3 * 1024;
  const auto s = make_samples(m);
  const singquad::PiecewiseFunction pf =
      singquad::paper_test_function(0.0, 0.4 * s.grid.h, 1.0);
  const std::vector<singquad::SingularitySpec> specs{
      pf.singularity(static_cast<std::size_t>(degree))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(singquad::corrected_composite(rule, s, specs));
  }
}
BENCHMARK(BM_corrected_composite)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void BM_correction_evaluate(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const auto& c = singquad::generate_correction(degree, 1);
  const std::vector<double> jumps(static_cast<std::size_t>(degree) + 1, 0.5);
  double alpha = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(c.evaluate(0.25, alpha * 0.25, jumps));
    alpha = alpha < 0.9 ? alpha + 1e-3 : 0.1;
  }
}
BENCHMARK(BM_correction_evaluate)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
