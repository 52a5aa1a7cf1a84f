#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "paley/hardy.hpp"
#include "paley/kernels.hpp"
#include "paley/reference.hpp"
#include "paley/strong.hpp"
#include "paley/walsh.hpp"

using paley::DyadicRational;
using paley::Grid1D;
using paley::Grid2D;

namespace {

// sup over k of |mean of f over the I_k block containing j|, by enumeration
Grid1D maximal_by_enumeration(const Grid1D& f) {
  const unsigned N = f.resolution();
  std::vector<DyadicRational> best(f.size());
  for (unsigned k = 0; k <= N; ++k) {
    const std::size_t step = std::size_t{1} << k;
    for (std::size_t j = 0; j < f.size(); ++j) {
      DyadicRational sum;
      for (std::size_t c = j % step; c < f.size(); c += step) sum += f[c];
      const DyadicRational mean = abs(sum.times_pow2(-static_cast<std::int64_t>(N - k)));
      if (mean > best[j]) best[j] = mean;
    }
  }
  Grid1D out(N);
  for (std::size_t j = 0; j < f.size(); ++j) {
    std::vector<std::int64_t> one(f.size(), 0);
    one[j] = 1;
    out = add(out, scale(Grid1D(N, one), best[j]));
  }
  return out;
}

}  // namespace

TEST_CASE("maximal function of simple functions") {
  const Grid1D w1 = paley::walsh_function(1, 3);
  CHECK(paley::maximal_function(tensor(w1, w1)) == paley::constant_grid<Grid2D>(3, 1));
  CHECK(paley::maximal_function(paley::constant_grid<Grid1D>(4, -2)) == paley::constant_grid<Grid1D>(4, 2));
  CHECK(paley::maximal_function(Grid1D(3)).is_zero());
  // D_{2^m}: the average over I_k(0) is 2^min(k,m), elsewhere the best block is I_k with 2^k | j
  const Grid1D d = paley::dirichlet_closed_form(2, 3);
  CHECK(paley::maximal_function(d) == Grid1D(3, {4, 1, 2, 1, 4, 1, 2, 1}));
}

TEST_CASE("maximal function matches enumeration") {
  std::mt19937_64 rng(31);
  for (unsigned N = 0; N <= 5; ++N) {
    const auto f = oracle::random_grid<Grid1D>(rng, N);
    REQUIRE(paley::maximal_function(f) == maximal_by_enumeration(f));
  }
  for (unsigned N = 0; N <= 4; ++N) {
    const auto f = oracle::random_grid<Grid2D>(rng, N);
    REQUIRE(paley::maximal_function(f) == paley::reference::maximal_function_naive(f));
  }
}

TEST_CASE("maximal function dominates |f| and H1 dominates L1") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned N = static_cast<unsigned>(trial % 7);
    const auto f = oracle::random_grid<Grid1D>(rng, N);
    const auto report = paley::h1_norm(f);
    REQUIRE(report.l1 == l1_norm(f));
    REQUIRE(report.h1 == l1_norm(report.maximal));
    REQUIRE(report.h1 >= report.l1);
    const Grid1D gap = subtract(report.maximal, absolute(f));
    for (std::size_t j = 0; j < gap.size(); ++j) REQUIRE(gap[j] >= DyadicRational());
  }
}

TEST_CASE("H1 norm is invariant under refinement") {
  std::mt19937_64 rng(33);
  const auto f = oracle::random_grid<Grid2D>(rng, 3);
  CHECK(paley::h1_norm(refine(f, 5)).h1 == paley::h1_norm(f).h1);
  const auto g = oracle::random_grid<Grid1D>(rng, 4);
  CHECK(paley::h1_norm(refine(g, 9)).h1 == paley::h1_norm(g).h1);
}

TEST_CASE("counterexample has unit L1 and H1 norms") {
  for (unsigned n = 0; n <= 8; ++n) {
    const auto report = paley::h1_norm(paley::counterexample(n));
    REQUIRE(report.l1 == DyadicRational(1));
    REQUIRE(report.h1 == DyadicRational(1));
  }
  const auto d = paley::h1_norm(paley::difference_kernel(4));
  CHECK(d.l1 == DyadicRational(1));
  CHECK(d.h1 == DyadicRational(1));
}

TEST_CASE("Hp norms") {
  CHECK(paley::hp_norm(paley::counterexample(3), 1.0) == doctest::Approx(1.0));
  CHECK(paley::hp_norm(paley::constant_grid<Grid1D>(3, 1), 0.5) == doctest::Approx(1.0));
  const Grid1D d = paley::dirichlet_closed_form(2, 3);
  CHECK(paley::hp_norm(d, 1.0) == doctest::Approx(paley::h1_norm(d).h1.to_double()));
  CHECK_THROWS_AS(paley::hp_norm(d, 0.0), std::invalid_argument);
}
