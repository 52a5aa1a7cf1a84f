#pragma once

// Serial, deliberately naive reference implementations. They share no code
// with the parallel kernels and exist to check them (tests) and to measure
// them (bench).

#include <cstdint>
#include <span>
#include <vector>

#include "paley/grid.hpp"

namespace paley::reference {

/// Textbook in-place Walsh-Hadamard butterfly, single thread.
void fwht_serial(std::span<std::int64_t> values);

/// out[i] = sum_j in[j] (-1)^popcount(i & j), O(n^2).
std::vector<std::int64_t> hadamard_naive(std::span<const std::int64_t> values);

/// Coefficients by the inner-product definition ∫ f w_i (2D: ∫ f w_i ⊗ w_j).
Spectrum1D analyze_naive(const Grid1D& g);
Spectrum2D analyze_naive(const Grid2D& g);

/// D_n as the literal cellwise sum of w_0, ..., w_{n-1}; O(n 2^N).
Grid1D dirichlet_sum(std::uint64_t n, unsigned resolution);

/// Level-k dyadic averages by enumerating each block's cells.
std::vector<Grid2D> dyadic_averages_naive(const Grid2D& f);

/// f* as the cellwise maximum of |average| compared as exact rationals.
Grid2D maximal_function_naive(const Grid2D& f);

}  // namespace paley::reference
