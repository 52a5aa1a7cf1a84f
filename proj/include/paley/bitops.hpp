#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace paley {

using BigInt = boost::multiprecision::cpp_int;

/// Little-endian binary expansion of a nonnegative integer: digits()[k] is n_k.
/// Trailing zeros are not stored, so the expansion of 0 is empty.
class BinaryDigits {
 public:
  explicit BinaryDigits(std::uint64_t source);

  std::uint64_t source() const { return source_; }
  const std::vector<std::uint8_t>& digits() const { return digits_; }

  /// n_k, zero past the stored length.
  int operator[](std::size_t k) const { return k < digits_.size() ? digits_[k] : 0; }
  std::size_t size() const { return digits_.size(); }

 private:
  std::uint64_t source_;
  std::vector<std::uint8_t> digits_;
};

/// |n|: the position of the leading one bit, so 2^|n| <= n < 2^(|n|+1).
/// Throws std::invalid_argument for n = 0.
unsigned order(std::uint64_t n);

/// Smallest N with 2^N >= n (0 for n <= 1).
unsigned ceil_log2(std::uint64_t n);

/// V(n) = n_0 + sum_{k>=1} |n_k - n_{k-1}|, with V(0) = 0.
unsigned variation(std::uint64_t n);

/// Entry n-1 holds V(1) + ... + V(n), for n = 1..n_max.
std::vector<BigInt> variation_prefix_sums(std::uint64_t n_max);

}  // namespace paley
