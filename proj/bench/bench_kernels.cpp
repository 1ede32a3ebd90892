#include <benchmark/benchmark.h>

#include <random>

#include "s3nf/cylinder_wave.hpp"
#include "s3nf/nullform.hpp"
#include "s3nf/peter_weyl.hpp"
#include "s3nf/product_engine.hpp"

using namespace s3nf;

static void BM_synthesize(benchmark::State& st) {
  const int M = static_cast<int>(st.range(0));
  std::mt19937_64 rng(1);
  const GridPtr g = build_grid(M);
  const SU2Spectrum s = random_spectrum(M, rng);
  for (auto _ : st) benchmark::DoNotOptimize(synthesize(s, g));
}
BENCHMARK(BM_synthesize)->Arg(4)->Arg(8)->Arg(16);

static void BM_synthesize_reference(benchmark::State& st) {
  const int M = static_cast<int>(st.range(0));
  std::mt19937_64 rng(1);
  const GridPtr g = build_grid(M);
  const SU2Spectrum s = random_spectrum(M, rng);
  for (auto _ : st) benchmark::DoNotOptimize(synthesize_reference(s, g));
}
BENCHMARK(BM_synthesize_reference)->Arg(4)->Arg(8);

static void BM_sine_q0_engine(benchmark::State& st) {
  const int M = static_cast<int>(st.range(0));
  std::mt19937_64 rng(2);
  const SinePairEngine engine(M);
  const SU2Spectrum f = random_spectrum(M, rng), g = random_spectrum(M, rng);
  for (auto _ : st) benchmark::DoNotOptimize(engine.compute(f, g));
}
BENCHMARK(BM_sine_q0_engine)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_sine_q0_cg(benchmark::State& st) {
  const int M = static_cast<int>(st.range(0));
  std::mt19937_64 rng(2);
  const SU2Spectrum f = random_spectrum(M, rng), g = random_spectrum(M, rng);
  for (auto _ : st) benchmark::DoNotOptimize(q0_cg_sine(f, g));
}
BENCHMARK(BM_sine_q0_cg)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_q0_multiplier_grid(benchmark::State& st) {
  const int M = static_cast<int>(st.range(0));
  std::mt19937_64 rng(2);
  const SpacetimeSpectrum phi = freq_split(random_spectrum(M, rng)).plus;
  const SpacetimeSpectrum psi = freq_split(random_spectrum(M, rng)).plus;
  for (auto _ : st) benchmark::DoNotOptimize(q0_multiplier_route(phi, psi));
}
BENCHMARK(BM_q0_multiplier_grid)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
