#include "paley/parallel.hpp"

#include <omp.h>

#include <stdexcept>
#include <vector>

namespace paley {

int thread_count() { return omp_get_max_threads(); }

void set_thread_count(int threads) {
  if (threads < 1) throw std::invalid_argument("thread count must be positive");
  omp_set_num_threads(threads);
}

BigInt to_bigint(__int128 value) {
  const bool negative = value < 0;
  // -INT128_MIN is never reached: partial sums are bounded by 2^63 * kReductionChunk.
  unsigned __int128 magnitude = negative ? static_cast<unsigned __int128>(-value) : static_cast<unsigned __int128>(value);
  BigInt out = static_cast<std::uint64_t>(magnitude >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(magnitude);
  return negative ? BigInt(-out) : out;
}

BigInt exact_sum(std::span<const std::int64_t> values, bool absolute) {
  const std::size_t chunks = (values.size() + kReductionChunk - 1) / kReductionChunk;
  std::vector<__int128> partial(chunks, 0);
#pragma omp parallel for schedule(static) if (chunks > 1)
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = c * kReductionChunk;
    const std::size_t end = std::min(values.size(), begin + kReductionChunk);
    __int128 acc = 0;
    if (absolute) {
      for (std::size_t i = begin; i < end; ++i) acc += values[i] < 0 ? -static_cast<__int128>(values[i]) : values[i];
    } else {
      for (std::size_t i = begin; i < end; ++i) acc += values[i];
    }
    partial[c] = acc;
  }
  BigInt total = 0;
  for (const __int128 p : partial) total += to_bigint(p);
  return total;
}

}  // namespace paley
