#include <benchmark/benchmark.h>

#include <vector>

#include "nf/elimination.hpp"
#include "nf/normalization.hpp"
#include "nf/parse.hpp"
#include "nf/solver.hpp"

namespace {

const nf::BiPoly kCubicP = nf::parse_polynomial("x^3 - 3*x*y^2 + 2*y - 7");
const nf::BiPoly kCubicQ = nf::parse_polynomial("3*x^2*y - y^3 + x^2 - 4*x + 1");

void BM_ResultantCubics(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nf::resultant_wrt_y(kCubicP, kCubicQ));
}
BENCHMARK(BM_ResultantCubics);

void BM_SolveCircleHyperbola(benchmark::State& state) {
  const nf::BiPoly p = nf::parse_polynomial("x^2 + y^2 - 5"), q = nf::parse_polynomial("x*y - 2");
  for (auto _ : state) benchmark::DoNotOptimize(nf::solve(p, q));
}
BENCHMARK(BM_SolveCircleHyperbola);

void BM_SolveCubics(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nf::solve(kCubicP, kCubicQ));
}
BENCHMARK(BM_SolveCubics);

void BM_NormalSystem(benchmark::State& state) {
  for (auto _ : state) {
    const auto ns = nf::build_normal_system(kCubicP, kCubicQ, nf::build_multipliers(kCubicP, kCubicQ));
    benchmark::DoNotOptimize(nf::check_normality(ns));
  }
}
BENCHMARK(BM_NormalSystem);

// Multiplicity k^2 at the origin of (x^k, y^k).
void BM_DualSpace(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const std::vector<nf::BiPoly> system{nf::BiPoly::monomial({k, 0}), nf::BiPoly::monomial({0, k})};
  for (auto _ : state) benchmark::DoNotOptimize(nf::dual_space(system, {0, 0}, k * k + 1));
}
BENCHMARK(BM_DualSpace)->Arg(2)->Arg(3)->Arg(4);

}  // namespace
BENCHMARK_MAIN();
