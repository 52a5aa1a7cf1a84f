#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "paley/dyadic_rational.hpp"

namespace paley {

/// Exact values of a cylinder function (or of its Walsh spectrum) at dyadic
/// resolution N.
///
/// A 1D array has 2^N cells. Cell index j encodes the point coordinates
/// LSB-first: bit k of j is x_k, so cell j lies in I_m(0) iff j % 2^m == 0.
/// A 2D array has 2^N x 2^N cells stored row-major by the first coordinate,
/// entry (i, j) at i * 2^N + j.
///
/// Storage is an int64 numerator per cell over a shared denominator
/// 2^exponent. The exponent is kept minimal, so two arrays compare equal
/// exactly when they hold the same values.
template <int Dim, class Tag>
class DyadicArray {
  static_assert(Dim == 1 || Dim == 2);

 public:
  static constexpr int dimension = Dim;
  /// Hard limit on representable sizes, well above any CLI cap.
  static constexpr unsigned max_resolution = Dim == 1 ? 30 : 15;

  DyadicArray() : DyadicArray(0) {}

  /// All-zero array.
  explicit DyadicArray(unsigned resolution) : resolution_(checked_resolution(resolution)) {
    cells_.assign(std::size_t{1} << (Dim * resolution_), 0);
  }

  DyadicArray(unsigned resolution, std::vector<std::int64_t> cells, std::uint64_t exponent = 0)
      : resolution_(checked_resolution(resolution)), exponent_(exponent), cells_(std::move(cells)) {
    if (cells_.size() != (std::size_t{1} << (Dim * resolution_))) {
      throw std::invalid_argument("DyadicArray: cell count does not match resolution");
    }
    normalize();
  }

  unsigned resolution() const { return resolution_; }
  std::size_t side() const { return std::size_t{1} << resolution_; }
  std::size_t size() const { return cells_.size(); }

  /// Shared denominator exponent; value of cell c is cells()[c] / 2^exponent().
  std::uint64_t exponent() const { return exponent_; }
  const std::vector<std::int64_t>& cells() const { return cells_; }

  DyadicRational operator[](std::size_t index) const { return DyadicRational(BigInt(cells_.at(index)), exponent_); }

  DyadicRational at(std::size_t i, std::size_t j) const
    requires(Dim == 2)
  {
    if (i >= side() || j >= side()) throw std::out_of_range("DyadicArray::at");
    return (*this)[i * side() + j];
  }

  bool is_zero() const {
    for (const auto c : cells_)
      if (c != 0) return false;
    return true;
  }

  /// Largest |numerator| over all cells.
  std::uint64_t max_abs_numerator() const {
    std::uint64_t m = 0;
    for (const auto c : cells_) {
      const std::uint64_t a = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
      m = a > m ? a : m;
    }
    return m;
  }

  friend bool operator==(const DyadicArray&, const DyadicArray&) = default;

 private:
  static unsigned checked_resolution(unsigned resolution) {
    if (resolution > max_resolution) throw std::length_error("DyadicArray: resolution too large");
    return resolution;
  }

  void normalize() {
    std::uint64_t bits = 0;
    for (const auto c : cells_) bits |= static_cast<std::uint64_t>(c);
    if (bits == 0) {
      exponent_ = 0;
      return;
    }
    std::uint64_t shift = 0;
    while (shift < exponent_ && ((bits >> shift) & 1U) == 0) ++shift;
    if (shift == 0) return;
    for (auto& c : cells_) c >>= shift;  // exact: every cell has `shift` trailing zeros
    exponent_ -= shift;
  }

  unsigned resolution_ = 0;
  std::uint64_t exponent_ = 0;
  std::vector<std::int64_t> cells_;
};

struct CellTag {};
struct CoefficientTag {};

using Grid1D = DyadicArray<1, CellTag>;
using Grid2D = DyadicArray<2, CellTag>;
using Spectrum1D = DyadicArray<1, CoefficientTag>;
using Spectrum2D = DyadicArray<2, CoefficientTag>;

template <class T>
concept GridType = std::same_as<T, Grid1D> || std::same_as<T, Grid2D>;

/// Grid with every cell equal to value. Throws std::overflow_error if the
/// value's numerator does not fit in 64 bits.
template <GridType G>
G constant_grid(unsigned resolution, const DyadicRational& value);

/// Exact Haar integral: mean of the cell values.
template <GridType G>
DyadicRational integrate(const G& g);

template <GridType G>
DyadicRational l1_norm(const G& g);

/// (integral |g|^p)^(1/p) in floating point. Throws std::invalid_argument for p <= 0.
template <GridType G>
double lp_norm(const G& g, double p);

// Cellwise algebra. Binary operations require equal resolutions
// (std::invalid_argument otherwise) and throw std::overflow_error when a
// result numerator leaves the int64 range.
template <GridType G>
G add(const G& a, const G& b);
template <GridType G>
G subtract(const G& a, const G& b);
template <GridType G>
G multiply(const G& a, const G& b);
template <GridType G>
G absolute(const G& g);
template <GridType G>
G scale(const G& g, const DyadicRational& factor);

/// Same function at a finer resolution: each cell's value is copied to all of
/// its sub-cells. Throws std::invalid_argument if target < resolution.
template <GridType G>
G refine(const G& g, unsigned target);

/// (a ⊗ b)(i, j) = a[i] * b[j].
Grid2D tensor(const Grid1D& a, const Grid1D& b);

}  // namespace paley
