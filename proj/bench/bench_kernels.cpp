// Serial vs OpenMP truncated multiplication, plus a full suite grid.
#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

#include "qtrunc/kernels.hpp"
#include "qtrunc/series.hpp"
#include "qtrunc/suites.hpp"

using namespace qtrunc;

namespace {

std::vector<BigInt> random_coefficients(std::size_t len, double density, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution present(density);
  std::uniform_int_distribution<long> value(-1000000, 1000000);
  std::vector<BigInt> out(len);
  for (auto& c : out) {
    if (present(rng)) c = value(rng);
  }
  return out;
}

template <bool Parallel>
void BM_mul(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  const double density = static_cast<double>(state.range(1)) / 100.0;
  const auto a = random_coefficients(len, density, 1);
  const auto b = random_coefficients(len, 1.0, 2);
  std::vector<BigInt> out(len);
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::mul_parallel(a, b, out);
    } else {
      kernels::mul_serial(a, b, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.counters["threads"] = Parallel ? omp_get_max_threads() : 1;
}

void BM_theorem13_grid(benchmark::State& state) {
  const SuiteSpec spec{"theorem13", {{"R", {2, 8}}, {"S", {1, 7}}, {"k", {1, 5}}, {"N", {state.range(0), state.range(0)}}}};
  for (auto _ : state) {
    auto run = run_suite(spec);
    benchmark::DoNotOptimize(run.reports.data());
  }
}

}  // namespace

BENCHMARK(BM_mul<false>)->ArgsProduct({{200, 800, 2000}, {5, 100}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_mul<true>)->ArgsProduct({{200, 800, 2000}, {5, 100}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_theorem13_grid)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
