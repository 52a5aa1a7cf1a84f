#include "paley/dyadic_rational.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace paley {

DyadicRational::DyadicRational(BigInt numerator, std::uint64_t exponent)
    : numerator_(std::move(numerator)), exponent_(exponent) {
  canonicalize();
}

void DyadicRational::canonicalize() {
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  if (exponent_ == 0) return;
  const std::uint64_t twos = boost::multiprecision::lsb(abs(numerator_));
  const std::uint64_t shift = std::min(twos, exponent_);
  numerator_ >>= shift;
  exponent_ -= shift;
}

double DyadicRational::to_double() const {
  if (numerator_ == 0) return 0.0;
  const auto bits = boost::multiprecision::msb(abs(numerator_)) + 1;
  if (bits <= 1000) {
    return std::ldexp(numerator_.convert_to<double>(), -static_cast<int>(exponent_));
  }
  // keep the 64 leading bits; the rest is below double precision anyway
  const auto drop = static_cast<std::int64_t>(bits - 64);
  const BigInt head = numerator_ >> drop;
  return std::ldexp(head.convert_to<double>(), static_cast<int>(drop - static_cast<std::int64_t>(exponent_)));
}

std::string DyadicRational::to_string() const {
  return fmt::format("{}/2^{}", numerator_.str(), exponent_);
}

DyadicRational DyadicRational::times_pow2(std::int64_t shift) const {
  if (numerator_ == 0) return {};
  if (shift >= 0) {
    const auto s = static_cast<std::uint64_t>(shift);
    if (s <= exponent_) return DyadicRational(numerator_, exponent_ - s);
    return DyadicRational(numerator_ << (s - exponent_), 0);
  }
  return DyadicRational(numerator_, exponent_ + static_cast<std::uint64_t>(-shift));
}

DyadicRational DyadicRational::operator-() const {
  DyadicRational out = *this;
  out.numerator_ = -out.numerator_;
  return out;
}

DyadicRational& DyadicRational::operator+=(const DyadicRational& rhs) {
  if (exponent_ >= rhs.exponent_) {
    numerator_ += rhs.numerator_ << (exponent_ - rhs.exponent_);
  } else {
    numerator_ = (numerator_ << (rhs.exponent_ - exponent_)) + rhs.numerator_;
    exponent_ = rhs.exponent_;
  }
  canonicalize();
  return *this;
}

DyadicRational& DyadicRational::operator-=(const DyadicRational& rhs) { return *this += -rhs; }

DyadicRational& DyadicRational::operator*=(const DyadicRational& rhs) {
  numerator_ *= rhs.numerator_;
  exponent_ += rhs.exponent_;
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const DyadicRational& lhs, const DyadicRational& rhs) {
  const std::uint64_t e = std::max(lhs.exponent_, rhs.exponent_);
  const BigInt a = lhs.numerator_ << (e - lhs.exponent_);
  const BigInt b = rhs.numerator_ << (e - rhs.exponent_);
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

DyadicRational abs(const DyadicRational& value) { return value.sign() < 0 ? -value : value; }

}  // namespace paley
