#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "paley/bitops.hpp"
#include "paley/kernels.hpp"
#include "paley/reference.hpp"
#include "paley/walsh.hpp"

using paley::DyadicRational;
using paley::Grid1D;

TEST_CASE("small Dirichlet kernels") {
  CHECK(paley::dirichlet_recursive(5, 3) == Grid1D(3, {5, 1, 1, 1, 3, -1, -1, -1}));
  CHECK(paley::dirichlet_direct(5, 3) == Grid1D(3, {5, 1, 1, 1, 3, -1, -1, -1}));
  CHECK(paley::dirichlet_recursive(0, 3).is_zero());
  CHECK(paley::dirichlet_direct(0, 0).is_zero());
  CHECK(paley::dirichlet_recursive(1, 0) == Grid1D(0, {1}));
  CHECK_THROWS_AS(paley::dirichlet_recursive(9, 3), std::invalid_argument);
  CHECK_THROWS_AS(paley::dirichlet_direct(9, 3), std::invalid_argument);
}

TEST_CASE("constructions agree with the literal sum") {
  for (unsigned N = 0; N <= 7; ++N)
    for (std::uint64_t n = 0; n <= (std::uint64_t{1} << N); ++n) {
      const Grid1D expected(N, oracle::dirichlet_cells(n, N));
      REQUIRE(paley::dirichlet_recursive(n, N) == expected);
      REQUIRE(paley::dirichlet_direct(n, N) == expected);
      REQUIRE(paley::reference::dirichlet_sum(n, N) == expected);
    }
}

TEST_CASE("constructions agree at larger n") {
  for (std::uint64_t n : {1000ULL, 2047ULL, 2048ULL, 3001ULL, 4095ULL, 4096ULL})
    CHECK(paley::dirichlet_recursive(n, 12) == paley::dirichlet_direct(n, 12));
}

TEST_CASE("closed form at powers of two") {
  CHECK(paley::dirichlet_closed_form(2, 2) == Grid1D(2, {4, 0, 0, 0}));
  CHECK(paley::dirichlet_closed_form(0, 2) == paley::constant_grid<Grid1D>(2, 1));
  CHECK_THROWS_AS(paley::dirichlet_closed_form(3, 2), std::invalid_argument);
  for (unsigned m = 0; m <= 12; ++m) {
    const Grid1D d = paley::dirichlet_closed_form(m, 12);
    for (std::size_t j = 0; j < d.size(); ++j)
      REQUIRE(d.cells()[j] == (j % (std::size_t{1} << m) == 0 ? (std::int64_t{1} << m) : 0));
    REQUIRE(d == paley::dirichlet_recursive(std::uint64_t{1} << m, 12));
  }
}

TEST_CASE("digit recursion for D_n") {
  // D_{2^l + m} = D_{2^l} + w_{2^l} D_m for m < 2^l
  for (unsigned l = 0; l < 6; ++l)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << l); ++m) {
      const std::uint64_t p = std::uint64_t{1} << l;
      const Grid1D rhs =
          add(paley::dirichlet_closed_form(l, 6), multiply(paley::walsh_function(p, 6), paley::dirichlet_recursive(m, 6)));
      REQUIRE(paley::dirichlet_recursive(p + m, 6) == rhs);
    }
}

TEST_CASE("Lebesgue constants") {
  CHECK(paley::lebesgue_constant(1) == DyadicRational(1));
  CHECK(paley::lebesgue_constant(2) == DyadicRational(1));
  CHECK(paley::lebesgue_constant(3) == DyadicRational(3, 1));
  CHECK(paley::lebesgue_constant(5) == DyadicRational(7, 2));
  CHECK_THROWS_AS(paley::lebesgue_constant(0), std::invalid_argument);
  for (std::uint64_t n = 1; n <= 300; ++n) REQUIRE(paley::lebesgue_constant(n) == oracle::to_dyadic(oracle::lebesgue(n)));
  for (unsigned m = 0; m <= 20; ++m) CHECK(paley::lebesgue_constant(std::uint64_t{1} << m) == DyadicRational(1));
}

TEST_CASE("Lebesgue sweep records") {
  const auto sweep = paley::lebesgue_sweep(600);
  REQUIRE(sweep.records.size() == 600);
  DyadicRational running;
  for (std::uint64_t n = 1; n <= 600; ++n) {
    const auto& r = sweep.records[n - 1];
    REQUIRE(r.n == n);
    REQUIRE(r.variation == oracle::variation(n));
    REQUIRE(r.constant == (n <= 200 ? oracle::to_dyadic(oracle::lebesgue(n)) : paley::lebesgue_constant(n)));
    REQUIRE(r.constant_float == doctest::Approx(r.constant.to_double()));
    const DyadicRational v(static_cast<std::int64_t>(r.variation));
    REQUIRE(r.lower_ok == (v.times_pow2(-3) <= r.constant));
    REQUIRE(r.upper_ok == (r.constant <= v));
    REQUIRE(r.lower_ok);
    REQUIRE(r.upper_ok);
    running += r.constant;
    REQUIRE(sweep.prefix_sums[n - 1] == running);
  }
  CHECK_THROWS_AS(paley::lebesgue_sweep(0), std::invalid_argument);
}

TEST_CASE("Lebesgue table") {
  const paley::LebesgueTable table(9);
  CHECK(table.max_n() == 512);
  CHECK(table[0] == DyadicRational(0));
  for (std::uint64_t n = 1; n <= 512; ++n) {
    REQUIRE(table[n] == paley::lebesgue_constant(n));
    REQUIRE(DyadicRational(paley::BigInt(table.scaled(n)), 9) == table[n]);
  }
  CHECK_THROWS(table.scaled(513));
}
