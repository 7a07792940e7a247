// Serial reference vs OpenMP path for each parallel kernel.
// Arg 0 = Serial, 1 = Parallel.

#include <benchmark/benchmark.h>

#include <cmath>

#include "primemodes/abel_sums.hpp"
#include "primemodes/kernels.hpp"
#include "primemodes/prime_core.hpp"

namespace {

using primemodes::ModeSet;
using primemodes::kernels::Execution;

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_CountPrimes(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(primemodes::kernels::count_primes(limit, exec_of(state)));
  }
  state.counters["limit"] = static_cast<double>(limit);
}
BENCHMARK(BM_CountPrimes)->ArgsProduct({{0, 1}, {10'000'000, 100'000'000}})->Unit(benchmark::kMillisecond);

void BM_InversePrimeSum(benchmark::State& state) {
  // f(a) at a = 1e-6 needs a cutoff of about 2.4e7
  const double a = 1e-6;
  const auto cutoff = primemodes::cutoff_for(primemodes::AbelKind::InversePrimes, a, 1e-12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(primemodes::prime_damped_sum(
        primemodes::AbelKind::InversePrimes, a, ModeSet::PrimesP, cutoff, exec_of(state)));
  }
  state.counters["cutoff"] = static_cast<double>(cutoff);
}
BENCHMARK(BM_InversePrimeSum)->ArgsProduct({{0, 1}})->Unit(benchmark::kMillisecond);

void BM_GoldbachTable(benchmark::State& state) {
  const auto max_n = static_cast<std::uint64_t>(state.range(1));
  const auto table = primemodes::sieve(max_n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        primemodes::goldbach_count_table(table, max_n, ModeSet::PrimesP, exec_of(state)));
  }
}
BENCHMARK(BM_GoldbachTable)->ArgsProduct({{0, 1}, {20'000}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
