// Parallel kernels against the serial reference implementations.
// PALEY_THREADS sets the thread count for the parallel side.

#include <benchmark/benchmark.h>

#include <cstdlib>
#include <random>

#include "paley/hardy.hpp"
#include "paley/kernels.hpp"
#include "paley/parallel.hpp"
#include "paley/reference.hpp"
#include "paley/transform.hpp"
#include "paley/walsh.hpp"

namespace {

std::vector<std::int64_t> random_cells(std::size_t size) {
  std::mt19937_64 rng(7);
  std::vector<std::int64_t> v(size);
  for (auto& x : v) x = static_cast<std::int64_t>(rng() % 201) - 100;
  return v;
}

void BM_fwht(benchmark::State& state) {
  const auto input = random_cells(std::size_t{1} << state.range(0));
  for (auto _ : state) {
    auto v = input;
    paley::fwht(v);
    benchmark::DoNotOptimize(v.data());
  }
}

void BM_fwht_serial(benchmark::State& state) {
  const auto input = random_cells(std::size_t{1} << state.range(0));
  for (auto _ : state) {
    auto v = input;
    paley::reference::fwht_serial(v);
    benchmark::DoNotOptimize(v.data());
  }
}

void BM_hadamard_naive(benchmark::State& state) {
  const auto input = random_cells(std::size_t{1} << state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(paley::reference::hadamard_naive(input));
}

void BM_dirichlet_direct(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(paley::dirichlet_direct(n, paley::ceil_log2(n)));
}

void BM_dirichlet_recursive(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(paley::dirichlet_recursive(n, paley::ceil_log2(n)));
}

void BM_dirichlet_literal(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(paley::reference::dirichlet_sum(n, paley::ceil_log2(n)));
}

void BM_maximal_2d(benchmark::State& state) {
  const auto N = static_cast<unsigned>(state.range(0));
  const paley::Grid2D f(N, random_cells(std::size_t{1} << (2 * N)));
  for (auto _ : state) benchmark::DoNotOptimize(paley::maximal_function(f));
}

void BM_maximal_2d_naive(benchmark::State& state) {
  const auto N = static_cast<unsigned>(state.range(0));
  const paley::Grid2D f(N, random_cells(std::size_t{1} << (2 * N)));
  for (auto _ : state) benchmark::DoNotOptimize(paley::reference::maximal_function_naive(f));
}

}  // namespace

BENCHMARK(BM_fwht)->DenseRange(12, 22, 5);
BENCHMARK(BM_fwht_serial)->DenseRange(12, 22, 5);
BENCHMARK(BM_hadamard_naive)->DenseRange(8, 12, 2);
BENCHMARK(BM_dirichlet_direct)->Arg(3001)->Arg(1 << 16)->Arg((1 << 20) - 1);
BENCHMARK(BM_dirichlet_recursive)->Arg(3001)->Arg(1 << 16)->Arg((1 << 20) - 1);
BENCHMARK(BM_dirichlet_literal)->Arg(3001)->Arg(1 << 12);
BENCHMARK(BM_maximal_2d)->DenseRange(6, 10, 2);
BENCHMARK(BM_maximal_2d_naive)->DenseRange(6, 8, 2);

int main(int argc, char** argv) {
  if (const char* env = std::getenv("PALEY_THREADS"); env != nullptr && *env != '\0') paley::set_thread_count(std::atoi(env));
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::AddCustomContext("threads", std::to_string(paley::thread_count()));
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
