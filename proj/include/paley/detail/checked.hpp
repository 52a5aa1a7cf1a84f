#pragma once

#include <cstdint>
#include <stdexcept>

#include "paley/bitops.hpp"

namespace paley::detail {

inline bool add_overflows(std::int64_t a, std::int64_t b, std::int64_t& out) { return __builtin_add_overflow(a, b, &out); }
inline bool sub_overflows(std::int64_t a, std::int64_t b, std::int64_t& out) { return __builtin_sub_overflow(a, b, &out); }
inline bool mul_overflows(std::int64_t a, std::int64_t b, std::int64_t& out) { return __builtin_mul_overflow(a, b, &out); }

inline bool shl_overflows(std::int64_t a, std::uint64_t shift, std::int64_t& out) {
  if (a == 0) {
    out = 0;
    return false;
  }
  if (shift == 0) {
    out = a;
    return false;
  }
  if (shift >= 63) return true;
  const std::int64_t bound = std::int64_t{1} << (63 - shift);
  if (a >= bound || a < -bound) return true;
  out = static_cast<std::int64_t>(static_cast<std::uint64_t>(a) << shift);
  return false;
}

/// Numerator of a dyadic rational as int64, or std::overflow_error.
inline std::int64_t to_int64(const BigInt& value) {
  if (value > BigInt(INT64_MAX) || value < BigInt(INT64_MIN)) throw std::overflow_error("value does not fit in 64 bits");
  return value.convert_to<std::int64_t>();
}

/// Throws unless max_abs * 2^growth_bits stays below 2^62.
inline void require_headroom(std::uint64_t max_abs, unsigned growth_bits, const char* what) {
  if (max_abs == 0) return;
  if (growth_bits >= 62 || max_abs > (std::uint64_t{1} << (62 - growth_bits))) throw std::overflow_error(what);
}

}  // namespace paley::detail
