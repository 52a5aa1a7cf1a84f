#pragma once

#include <cstdint>
#include <span>

#include "paley/bitops.hpp"

namespace paley {

/// Number of OpenMP threads used by the parallel kernels. Results never
/// depend on this value: exact reductions are order-free and float
/// reductions use fixed chunking.
int thread_count();
void set_thread_count(int threads);

/// Chunk length for deterministic reductions (independent of thread count).
inline constexpr std::size_t kReductionChunk = std::size_t{1} << 16;

/// Exact sum of values (or of their absolute values).
BigInt exact_sum(std::span<const std::int64_t> values, bool absolute = false);

BigInt to_bigint(__int128 value);

}  // namespace paley
