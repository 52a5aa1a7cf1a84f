#include "paley/transform.hpp"

#include <bit>
#include <stdexcept>

namespace paley {
namespace {

constexpr std::size_t kTile = std::size_t{1} << 12;

void fwht_serial_line(std::int64_t* v, std::size_t n) {
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t base = 0; base < n; base += 2 * h) {
      for (std::size_t j = base; j < base + h; ++j) {
        const std::int64_t x = v[j];
        const std::int64_t y = v[j + h];
        v[j] = x + y;
        v[j + h] = x - y;
      }
    }
  }
}

// Butterfly over the row index of a rows x width row-major array; each pair of
// rows combines with one contiguous inner loop.
void butterfly_rows(std::int64_t* v, std::size_t rows, std::size_t width, bool parallel) {
  const std::size_t pairs = rows / 2;
  for (std::size_t h = 1; h < rows; h <<= 1) {
#pragma omp parallel for schedule(static) if (parallel)
    for (std::size_t p = 0; p < pairs; ++p) {
      const std::size_t r = (p / h) * 2 * h + (p & (h - 1));
      std::int64_t* top = v + r * width;
      std::int64_t* bottom = v + (r + h) * width;
      for (std::size_t c = 0; c < width; ++c) {
        const std::int64_t x = top[c];
        const std::int64_t y = bottom[c];
        top[c] = x + y;
        bottom[c] = x - y;
      }
    }
  }
}

}  // namespace

void fwht(std::span<std::int64_t> values) {
  const std::size_t n = values.size();
  if (!std::has_single_bit(n)) throw std::invalid_argument("fwht: length must be a power of two");
  if (n <= kTile) {
    fwht_serial_line(values.data(), n);
    return;
  }
  // Low stages inside cache-sized tiles, then the high stages across tiles.
  std::int64_t* v = values.data();
  const std::size_t tiles = n / kTile;
#pragma omp parallel for schedule(static)
  for (std::size_t t = 0; t < tiles; ++t) fwht_serial_line(v + t * kTile, kTile);
  butterfly_rows(v, tiles, kTile, true);
}

void fwht_2d(std::span<std::int64_t> values, std::size_t side) {
  if (!std::has_single_bit(side) || values.size() != side * side) {
    throw std::invalid_argument("fwht_2d: expected a square power-of-two array");
  }
  std::int64_t* v = values.data();
  const bool parallel = values.size() > kTile;

  if (side > kTile) {
    for (std::size_t r = 0; r < side; ++r) fwht(values.subspan(r * side, side));
  } else {
#pragma omp parallel for schedule(static) if (parallel)
    for (std::size_t r = 0; r < side; ++r) fwht_serial_line(v + r * side, side);
  }
  butterfly_rows(v, side, side, parallel);
}

}  // namespace paley
