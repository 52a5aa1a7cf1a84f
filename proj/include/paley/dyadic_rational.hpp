#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "paley/bitops.hpp"

namespace paley {

/// Exact number numerator / 2^exponent.
///
/// Always kept canonical: the numerator is odd, or the value is zero with
/// exponent 0. Two canonical values are equal iff their fields are equal.
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(BigInt numerator, std::uint64_t exponent = 0);  // NOLINT(implicit)
  DyadicRational(std::int64_t value) : DyadicRational(BigInt(value)) {}  // NOLINT(implicit)
  DyadicRational(int value) : DyadicRational(BigInt(value)) {}  // NOLINT(implicit)

  const BigInt& numerator() const { return numerator_; }
  std::uint64_t exponent() const { return exponent_; }

  bool is_zero() const { return numerator_ == 0; }
  int sign() const { return numerator_.sign(); }

  double to_double() const;
  /// "numerator/2^exponent"
  std::string to_string() const;

  /// Multiplies by 2^shift (shift may be negative).
  DyadicRational times_pow2(std::int64_t shift) const;

  DyadicRational operator-() const;
  DyadicRational& operator+=(const DyadicRational& rhs);
  DyadicRational& operator-=(const DyadicRational& rhs);
  DyadicRational& operator*=(const DyadicRational& rhs);

  friend DyadicRational operator+(DyadicRational lhs, const DyadicRational& rhs) { return lhs += rhs; }
  friend DyadicRational operator-(DyadicRational lhs, const DyadicRational& rhs) { return lhs -= rhs; }
  friend DyadicRational operator*(DyadicRational lhs, const DyadicRational& rhs) { return lhs *= rhs; }

  friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
  friend std::strong_ordering operator<=>(const DyadicRational& lhs, const DyadicRational& rhs);

 private:
  void canonicalize();

  BigInt numerator_ = 0;
  std::uint64_t exponent_ = 0;
};

DyadicRational abs(const DyadicRational& value);

}  // namespace paley
