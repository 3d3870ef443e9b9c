#include <benchmark/benchmark.h>

#include "hermtri/height.hpp"
#include "hermtri/interp.hpp"
#include "hermtri/primary.hpp"

using namespace hermtri;

namespace {

GenSpec bivariate(unsigned fiber, unsigned delta_max, unsigned bits) {
  GenSpec s;
  s.n = 2;
  s.fibers = {fiber, fiber};
  s.delta_min = 1;
  s.delta_max = delta_max;
  s.coeff_bits = bits;
  s.point_bits = bits;
  return s;
}

}  // namespace

static void BM_ReconstructBivariate(benchmark::State& state) {
  const auto fiber = static_cast<unsigned>(state.range(0));
  const PrimaryFamily fam = gen_family(bivariate(fiber, 3, 16), 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reconstruct(fam));
  }
}
BENCHMARK(BM_ReconstructBivariate)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_ReconstructRadical(benchmark::State& state) {
  const auto fiber = static_cast<unsigned>(state.range(0));
  const PrimaryFamily fam = gen_family(bivariate(fiber, 1, 16), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reconstruct(fam));
  }
}
BENCHMARK(BM_ReconstructRadical)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_ReconstructTrivariate(benchmark::State& state) {
  GenSpec s;
  s.n = 3;
  s.fibers = {3, 3, 3};
  s.delta_max = 2;
  s.max_mu = 8;
  s.coeff_bits = 8;
  s.point_bits = 8;
  const PrimaryFamily fam = gen_family(s, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reconstruct(fam));
  }
}
BENCHMARK(BM_ReconstructTrivariate)->Unit(benchmark::kMillisecond);

static void BM_VerifyAll(benchmark::State& state) {
  const PrimaryFamily fam = gen_family(bivariate(4, 3, 16), 42);
  const ReconstructionResult r = reconstruct(fam);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_all(fam, r));
  }
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond);

static void BM_NormalForm(benchmark::State& state) {
  const PrimaryFamily fam = gen_family(bivariate(6, 3, 16), 42);
  const ReconstructionResult r = reconstruct(fam);
  const TriangularSet lower = r.T.prefix(1);
  const MPoly prod = r.T.at(2) * r.N[1];
  for (auto _ : state) {
    benchmark::DoNotOptimize(normal_form(prod, lower));
  }
}
BENCHMARK(BM_NormalForm)->Unit(benchmark::kMicrosecond);

static void BM_Measure(benchmark::State& state) {
  const PrimaryFamily fam = gen_family(bivariate(6, 3, 16), 42);
  const ReconstructionResult r = reconstruct(fam);
  for (auto _ : state) {
    benchmark::DoNotOptimize(measure(fam, r));
  }
}
BENCHMARK(BM_Measure)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
