#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "paley/hardy.hpp"
#include "paley/kernels.hpp"
#include "paley/parallel.hpp"
#include "paley/reference.hpp"
#include "paley/strong.hpp"
#include "paley/transform.hpp"
#include "paley/walsh.hpp"

using paley::BigInt;
using paley::Grid1D;
using paley::Grid2D;

namespace {

struct ThreadGuard {
  int saved = paley::thread_count();
  ~ThreadGuard() { paley::set_thread_count(saved); }
};

}  // namespace

TEST_CASE("exact sums") {
  std::vector<std::int64_t> v{INT64_MAX, INT64_MAX, INT64_MIN};
  CHECK(paley::exact_sum(v) == BigInt(INT64_MAX) - 1);
  CHECK(paley::exact_sum(v, true) == BigInt(INT64_MAX) * 2 + (BigInt(1) << 63));
  CHECK(paley::exact_sum({}) == 0);
  CHECK(paley::to_bigint(static_cast<__int128>(INT64_MAX) * 4) == BigInt(INT64_MAX) * 4);
  CHECK(paley::to_bigint(-static_cast<__int128>(INT64_MAX) * 4) == BigInt(INT64_MAX) * -4);

  std::vector<std::int64_t> big(3 * paley::kReductionChunk + 17, -3);
  CHECK(paley::exact_sum(big) == BigInt(-3) * static_cast<std::int64_t>(big.size()));
  CHECK(paley::exact_sum(big, true) == BigInt(3) * static_cast<std::int64_t>(big.size()));
}

TEST_CASE("parallel kernels match the serial reference at every thread count") {
  ThreadGuard guard;
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<std::int64_t> dist(-50, 50);
  std::vector<std::int64_t> input(std::size_t{1} << 16);
  for (auto& x : input) x = dist(rng);
  std::vector<std::int64_t> expected = input;
  paley::reference::fwht_serial(expected);

  const auto f2 = oracle::random_grid<Grid2D>(rng, 8);
  const auto max2 = paley::reference::maximal_function_naive(f2);

  for (int threads : {1, 2, 3, 4}) {
    CAPTURE(threads);
    paley::set_thread_count(threads);
    CHECK(paley::thread_count() == threads);
    std::vector<std::int64_t> v = input;
    paley::fwht(v);
    CHECK(v == expected);
    CHECK(paley::maximal_function(f2) == max2);
    CHECK(paley::dirichlet_direct(3001, 12) == paley::reference::dirichlet_sum(3001, 12));
    CHECK(paley::dirichlet_recursive(3001, 12) == paley::reference::dirichlet_sum(3001, 12));
  }
}

TEST_CASE("float reductions do not depend on the thread count") {
  ThreadGuard guard;
  paley::set_thread_count(1);
  const auto serial = paley::divergence_sweep(6, 12, paley::WeightFunction::log(), paley::LogBase::natural);
  const double g_serial = paley::theorem_g_sum(paley::counterexample(4), 32, paley::LogBase::natural);
  const auto fine_serial = paley::fine_ratios(1 << 16, paley::FineVariant::lebesgue);
  for (int threads : {2, 4}) {
    paley::set_thread_count(threads);
    const auto parallel = paley::divergence_sweep(6, 12, paley::WeightFunction::log(), paley::LogBase::natural);
    REQUIRE(parallel.size() == serial.size());
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(parallel[i].block_sum == serial[i].block_sum);
    CHECK(paley::theorem_g_sum(paley::counterexample(4), 32, paley::LogBase::natural) == g_serial);
    const auto fine_parallel = paley::fine_ratios(1 << 16, paley::FineVariant::lebesgue);
    CHECK(fine_parallel.back().ratio == fine_serial.back().ratio);
  }
}

TEST_CASE("2D butterfly is separable") {
  std::mt19937_64 rng(52);
  const auto g = oracle::random_grid<Grid2D>(rng, 4);
  std::vector<std::int64_t> v = g.cells();
  paley::fwht_2d(v, 16);
  // rows then columns by hand
  std::vector<std::int64_t> w = g.cells();
  for (std::size_t i = 0; i < 16; ++i) paley::reference::fwht_serial(std::span(w).subspan(i * 16, 16));
  for (std::size_t j = 0; j < 16; ++j) {
    std::vector<std::int64_t> column(16);
    for (std::size_t i = 0; i < 16; ++i) column[i] = w[i * 16 + j];
    paley::reference::fwht_serial(column);
    for (std::size_t i = 0; i < 16; ++i) w[i * 16 + j] = column[i];
  }
  CHECK(v == w);
}
