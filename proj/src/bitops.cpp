#include "paley/bitops.hpp"

#include <bit>
#include <stdexcept>

namespace paley {

BinaryDigits::BinaryDigits(std::uint64_t source) : source_(source) {
  for (std::uint64_t v = source; v != 0; v >>= 1) digits_.push_back(static_cast<std::uint8_t>(v & 1U));
}

unsigned order(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("order: undefined for n = 0");
  return static_cast<unsigned>(std::bit_width(n) - 1);
}

unsigned ceil_log2(std::uint64_t n) {
  if (n <= 1) return 0;
  return static_cast<unsigned>(std::bit_width(n - 1));
}

unsigned variation(std::uint64_t n) {
  // n XOR (n << 1) marks every position k where n_k != n_{k-1} (with n_{-1} = 0),
  // which covers n_0 and the final falling edge above the leading bit.
  const std::uint64_t low = n ^ (n << 1);
  const unsigned top = (n >> 63) & 1U;  // falling edge shifted out of the word
  return static_cast<unsigned>(std::popcount(low)) + top;
}

std::vector<BigInt> variation_prefix_sums(std::uint64_t n_max) {
  if (n_max == 0) throw std::invalid_argument("variation_prefix_sums: n_max must be positive");
  std::vector<BigInt> sums;
  sums.reserve(n_max);
  BigInt running = 0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    running += variation(n);
    sums.push_back(running);
  }
  return sums;
}

}  // namespace paley
