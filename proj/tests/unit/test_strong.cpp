#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "paley/errors.hpp"
#include "paley/hardy.hpp"
#include "paley/kernels.hpp"
#include "paley/strong.hpp"
#include "paley/walsh.hpp"

using paley::BigInt;
using paley::DyadicRational;
using paley::Grid1D;
using paley::Grid2D;
using paley::LogBase;
using paley::WeightFunction;

TEST_CASE("weight presets") {
  CHECK(WeightFunction::one()(100) == 1.0);
  CHECK(WeightFunction::log()(1) == 1.0);
  CHECK(WeightFunction::log()(1000) == doctest::Approx(std::log(1000.0)));
  CHECK(WeightFunction::loglog()(1) == doctest::Approx(std::log(std::log(17.0))));
  CHECK(WeightFunction::power(0.5)(3) == doctest::Approx(2.0));
  CHECK_THROWS_AS(WeightFunction::power(-1.0), std::invalid_argument);
  CHECK_FALSE(WeightFunction::one().unbounded());
  CHECK(WeightFunction::log().unbounded());
  CHECK_FALSE(WeightFunction::power(0.0).unbounded());
  for (const auto& w : {WeightFunction::one(), WeightFunction::log(), WeightFunction::loglog(), WeightFunction::power(0.3)})
    CHECK(w.validate(1 << 15));
  CHECK(WeightFunction::power(0.25).name() == "power(0.25)");
  CHECK(paley::log_in(LogBase::two, 8.0) == doctest::Approx(3.0));
}

TEST_CASE("counterexample f_{n,n}") {
  CHECK(paley::counterexample(0) == Grid2D(1, {1, -1, -1, 1}));
  CHECK_THROWS_AS(paley::counterexample(13), paley::ResourceCapError);
  CHECK_THROWS_AS(paley::counterexample(5, 4), paley::ResourceCapError);

  // coefficients: 1 on [2^n, 2^{n+1})^2, 0 elsewhere
  for (unsigned n = 0; n <= 6; ++n) {
    const auto s = paley::analyze(paley::counterexample(n));
    const std::size_t low = std::size_t{1} << n;
    for (std::size_t i = 0; i < s.side(); ++i)
      for (std::size_t j = 0; j < s.side(); ++j) REQUIRE(s.at(i, j) == DyadicRational(i >= low && j >= low ? 1 : 0));
  }
}

TEST_CASE("closed-form partial sums") {
  for (unsigned n = 0; n <= 4; ++n) {
    const Grid2D f = paley::counterexample(n);
    const std::uint64_t low = std::uint64_t{1} << n;
    for (std::uint64_t k = low + 1; k <= 2 * low; ++k) {
      const Grid2D s = paley::partial_sum(f, k, k);
      REQUIRE(s == paley::closed_form_partial_sum(n, k));
      REQUIRE(l1_norm(s) == paley::snn_norm(n, k));
    }
  }
  CHECK_THROWS_AS(paley::closed_form_partial_sum(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(paley::snn_norm(2, 9), std::invalid_argument);
}

TEST_CASE("snn norms") {
  CHECK(paley::snn_norm(3, 8 + 3) == DyadicRational(9, 2));
  CHECK(paley::snn_norm(3, 16) == DyadicRational(1));
  // lower bound V^2(k - 2^n)/64 over a full block
  for (unsigned n = 0; n <= 10; ++n) {
    const std::uint64_t low = std::uint64_t{1} << n;
    for (std::uint64_t k = low + 1; k <= 2 * low; ++k) {
      const auto v = static_cast<std::int64_t>(oracle::variation(k - low));
      REQUIRE(paley::snn_norm(n, k) >= DyadicRational(v * v).times_pow2(-6));
    }
  }
}

TEST_CASE("divergence sweep") {
  const auto r = paley::divergence_sweep(1, 1, WeightFunction::one(), LogBase::natural);
  REQUIRE(r.size() == 1);
  const double expected = 1.0 / (3.0 * std::pow(std::log(4.0), 2)) + 1.0 / (4.0 * std::pow(std::log(5.0), 2));
  CHECK(r[0].block_sum == doctest::Approx(expected).epsilon(1e-14));
  CHECK(r[0].phi_at_block == 1.0);
  CHECK(r[0].ratio == r[0].block_sum);

  // both paths agree
  const auto a = paley::divergence_sweep(0, 5, WeightFunction::log(), LogBase::two, paley::NormPath::shortcut);
  const auto b = paley::divergence_sweep(0, 5, WeightFunction::log(), LogBase::two, paley::NormPath::oracle);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].n == b[i].n);
    CHECK(a[i].block_sum == doctest::Approx(b[i].block_sum).epsilon(1e-12));
  }

  CHECK_THROWS_AS(paley::divergence_sweep(1, 15, WeightFunction::one(), LogBase::natural), paley::ResourceCapError);
  CHECK_THROWS_AS(paley::divergence_sweep(1, 9, WeightFunction::one(), LogBase::natural, paley::NormPath::oracle),
                  paley::ResourceCapError);
  CHECK_THROWS_AS(paley::divergence_sweep(4, 3, WeightFunction::one(), LogBase::natural), std::invalid_argument);
}

TEST_CASE("2D strong sum equals the summed block terms") {
  const Grid2D f = paley::counterexample(3);
  double expected = 0.0;
  for (std::uint64_t k = 1; k <= 16; ++k) {
    const double l = std::log(static_cast<double>(k) + 1.0);
    const double norm = k <= 8 ? 0.0 : paley::snn_norm(3, k).to_double();
    expected += norm / (static_cast<double>(k) * l * l);
  }
  CHECK(paley::theorem_g_sum(f, 16, LogBase::natural) == doctest::Approx(expected).epsilon(1e-14));
  CHECK_THROWS_AS(paley::theorem_g_sum(f, 17, LogBase::natural), std::invalid_argument);
}

TEST_CASE("simon sum") {
  // S_k 1 = 1 for every k >= 1, so the sum is the harmonic number over log n
  const Grid1D one = paley::constant_grid<Grid1D>(4, 1);
  double harmonic = 0.0;
  for (int k = 1; k <= 16; ++k) harmonic += 1.0 / k;
  CHECK(paley::simon_sum_1d(one, 16, LogBase::natural) == doctest::Approx(harmonic / std::log(16.0)));
  CHECK(paley::simon_sum_1d(one, 16, LogBase::two) == doctest::Approx(harmonic / 4.0));
  CHECK_THROWS_AS(paley::simon_sum_1d(one, 1, LogBase::natural), std::invalid_argument);
  CHECK_THROWS_AS(paley::simon_sum_1d(one, 17, LogBase::natural), std::invalid_argument);

  std::mt19937_64 rng(41);
  const auto f = oracle::random_grid<Grid1D>(rng, 5);
  double direct = 0.0;
  for (std::uint64_t k = 1; k <= 32; ++k) direct += l1_norm(paley::partial_sum(f, k)).to_double() / static_cast<double>(k);
  CHECK(paley::simon_sum_1d(f, 32, LogBase::natural) == doctest::Approx(direct / std::log(32.0)));
}

TEST_CASE("fine ratios") {
  const auto v = paley::fine_ratios(4, paley::FineVariant::variation);
  REQUIRE(v.size() == 2);
  CHECK(v[0].n == 2);
  CHECK(v[1].n == 4);
  CHECK(v[1].total == DyadicRational(8));
  CHECK(v[1].ratio == doctest::Approx(8.0 / (4.0 * std::log(4.0))));

  const auto l = paley::fine_ratios(2, paley::FineVariant::lebesgue);
  REQUIRE(l.size() == 1);
  CHECK(l[0].total == DyadicRational(2));
  CHECK(l[0].ratio == doctest::Approx(2.0 / (2.0 * std::log(2.0))));

  const auto odd = paley::fine_ratios(100, paley::FineVariant::lebesgue);
  CHECK(odd.back().n == 100);
  DyadicRational total;
  for (std::uint64_t n = 1; n <= 100; ++n) total += oracle::to_dyadic(oracle::lebesgue(n));
  CHECK(odd.back().total == total);
  CHECK_THROWS_AS(paley::fine_ratios(1, paley::FineVariant::variation), std::invalid_argument);
}

TEST_CASE("Cauchy-Schwarz step") {
  for (unsigned n = 1; n <= 20; ++n) {
    const auto sides = paley::cauchy_schwarz_sides(n);
    BigInt s = 0;
    BigInt s2 = 0;
    for (std::uint64_t k = 1; k <= (std::uint64_t{1} << n); ++k) {
      const unsigned v = oracle::variation(k);
      s += v;
      s2 += BigInt(v) * v;
    }
    REQUIRE(sides.lhs == s * s);
    REQUIRE(sides.rhs == (BigInt(1) << n) * s2);
    REQUIRE(paley::cauchy_schwarz_check(n));
    REQUIRE((sides.lhs == sides.rhs) == (n <= 2));
  }
}
