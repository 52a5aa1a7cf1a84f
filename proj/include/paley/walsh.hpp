#pragma once

#include <cstdint>
#include <vector>

#include "paley/grid.hpp"

namespace paley {

/// r_k(x) = (-1)^{x_k}. Requires k < resolution.
Grid1D rademacher(unsigned k, unsigned resolution);

/// Walsh-Paley function w_n: cell j holds (-1)^popcount(n & j). Requires n < 2^resolution.
Grid1D walsh_function(std::uint64_t n, unsigned resolution);

/// Walsh-Fourier coefficients f^(i) = ∫ f w_i (2D: f^(i,j) = ∫ f w_i ⊗ w_j),
/// via the fast transform scaled by 2^-N per dimension.
Spectrum1D analyze(const Grid1D& g);
Spectrum2D analyze(const Grid2D& g);

/// Inverse of analyze: g(j) = sum_i f^(i) w_i(j).
Grid1D synthesize(const Spectrum1D& s);
Grid2D synthesize(const Spectrum2D& s);

/// S_k f: keep coefficients with index < k. Requires k <= 2^N.
Grid1D partial_sum(const Grid1D& f, std::uint64_t k);
/// S_{M,N} f: keep coefficients (i, j) with i < m and j < n.
Grid2D partial_sum(const Grid2D& f, std::uint64_t m, std::uint64_t n);

/// Same as partial_sum, starting from an already computed spectrum.
Grid1D partial_sum_from(const Spectrum1D& spectrum, std::uint64_t k);
Grid2D partial_sum_from(const Spectrum2D& spectrum, std::uint64_t m, std::uint64_t n);

/// Sums of cell numerators over the dyadic blocks of every level.
///
/// levels[k] has 2^(Dim*k) entries; entry c (2D: a * 2^k + b) sums the cells
/// that agree with c in their first k coordinates. levels[N] is f itself, and
/// the average of f over such a block is levels[k][c] / 2^(Dim*(N-k) + exponent).
template <int Dim>
struct BlockSums {
  unsigned resolution = 0;
  std::uint64_t exponent = 0;
  std::vector<std::vector<std::int64_t>> levels;
};

BlockSums<1> block_sums(const Grid1D& f);
BlockSums<2> block_sums(const Grid2D& f);

/// Entry k (k = 0..N) is the dyadic average of f at level k, replicated back
/// to resolution N; this equals S_{2^k} f (2D: S_{2^k,2^k} f).
std::vector<Grid1D> dyadic_averages(const Grid1D& f);
std::vector<Grid2D> dyadic_averages(const Grid2D& f);

}  // namespace paley
