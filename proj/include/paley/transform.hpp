#pragma once

#include <cstdint>
#include <span>

namespace paley {

// Unnormalized Walsh-Hadamard butterflies in natural (Paley) order:
// out[i] = sum_j in[j] * (-1)^popcount(i & j). Applying one twice multiplies
// by the length. The caller guarantees int64 headroom (values grow by at most
// a factor of the length).

/// In-place 1D transform; length must be a power of two.
void fwht(std::span<std::int64_t> values);

/// In-place separable 2D transform of a side x side row-major array:
/// every row, then every column.
void fwht_2d(std::span<std::int64_t> values, std::size_t side);

}  // namespace paley
