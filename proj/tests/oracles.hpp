#pragma once

// Brute-force oracles for the tests. Everything here works straight from the
// definitions (digit lists, Rademacher products, literal sums, block
// enumeration) and deliberately avoids the library's transforms, recursions
// and pyramids.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "paley/grid.hpp"

namespace oracle {

inline std::vector<int> digits(std::uint64_t n) {
  std::vector<int> d;
  for (; n != 0; n /= 2) d.push_back(static_cast<int>(n % 2));
  return d;
}

/// V(n) = n_0 + sum_{k>=1} |n_k - n_{k-1}| evaluated term by term.
inline unsigned variation(std::uint64_t n) {
  const auto d = digits(n);
  auto digit = [&](std::size_t k) { return k < d.size() ? d[k] : 0; };
  unsigned v = static_cast<unsigned>(digit(0));
  for (std::size_t k = 1; k <= d.size(); ++k) v += static_cast<unsigned>(std::abs(digit(k) - digit(k - 1)));
  return v;
}

/// r_k at cell j: (-1)^{x_k} with x_k = bit k of j.
inline int rademacher(unsigned k, std::uint64_t j) { return ((j >> k) & 1U) ? -1 : 1; }

/// w_n at cell j as the product of Rademacher factors selected by n's digits.
inline int walsh(std::uint64_t n, std::uint64_t j) {
  int w = 1;
  const auto d = digits(n);
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k] == 1) w *= rademacher(static_cast<unsigned>(k), j);
  return w;
}

/// D_n(j) = sum_{k<n} w_k(j).
inline std::int64_t dirichlet(std::uint64_t n, std::uint64_t j) {
  std::int64_t s = 0;
  for (std::uint64_t k = 0; k < n; ++k) s += walsh(k, j);
  return s;
}

inline std::vector<std::int64_t> dirichlet_cells(std::uint64_t n, unsigned resolution) {
  std::vector<std::int64_t> cells(std::size_t{1} << resolution);
  for (std::size_t j = 0; j < cells.size(); ++j) cells[j] = dirichlet(n, j);
  return cells;
}

/// ‖D_n‖_1 as (sum_j |D_n(j)|, resolution): value = first / 2^second.
struct Fraction {
  std::int64_t numerator;
  unsigned exponent;
};

inline Fraction lebesgue(std::uint64_t n) {
  unsigned resolution = 0;
  while ((std::uint64_t{1} << resolution) < n) ++resolution;
  std::int64_t total = 0;
  for (const auto v : dirichlet_cells(n, resolution)) total += v < 0 ? -v : v;
  return {total, resolution};
}

inline paley::DyadicRational to_dyadic(Fraction f) { return paley::DyadicRational(paley::BigInt(f.numerator), f.exponent); }

template <class G>
G random_grid(std::mt19937_64& rng, unsigned resolution, std::int64_t lo = -9, std::int64_t hi = 9) {
  G shape(resolution);
  std::vector<std::int64_t> cells(shape.size());
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  for (auto& c : cells) c = dist(rng);
  return G(resolution, std::move(cells));
}

}  // namespace oracle
