#include "paley/reference.hpp"

#include <bit>
#include <stdexcept>

namespace paley::reference {
namespace {

inline int walsh_sign(std::uint64_t n, std::uint64_t j) { return (std::popcount(n & j) & 1) ? -1 : 1; }

}  // namespace

void fwht_serial(std::span<std::int64_t> values) {
  const std::size_t n = values.size();
  if (!std::has_single_bit(n)) throw std::invalid_argument("fwht_serial: length must be a power of two");
  for (std::size_t stride = n / 2; stride >= 1; stride >>= 1) {
    for (std::size_t base = 0; base < n; base += 2 * stride) {
      for (std::size_t j = 0; j < stride; ++j) {
        const std::int64_t a = values[base + j];
        const std::int64_t b = values[base + j + stride];
        values[base + j] = a + b;
        values[base + j + stride] = a - b;
      }
    }
  }
}

std::vector<std::int64_t> hadamard_naive(std::span<const std::int64_t> values) {
  const std::size_t n = values.size();
  std::vector<std::int64_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc += walsh_sign(i, j) * values[j];
    out[i] = acc;
  }
  return out;
}

Spectrum1D analyze_naive(const Grid1D& g) {
  std::vector<std::int64_t> out(g.size(), 0);
  const auto& f = g.cells();
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::int64_t acc = 0;
    for (std::size_t x = 0; x < g.size(); ++x) acc += walsh_sign(i, x) * f[x];
    out[i] = acc;
  }
  return Spectrum1D(g.resolution(), std::move(out), g.exponent() + g.resolution());
}

Spectrum2D analyze_naive(const Grid2D& g) {
  const std::size_t side = g.side();
  const auto& f = g.cells();
  std::vector<std::int64_t> out(g.size(), 0);
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      std::int64_t acc = 0;
      for (std::size_t x = 0; x < side; ++x) {
        const int sx = walsh_sign(i, x);
        for (std::size_t y = 0; y < side; ++y) acc += sx * walsh_sign(j, y) * f[x * side + y];
      }
      out[i * side + j] = acc;
    }
  }
  return Spectrum2D(g.resolution(), std::move(out), g.exponent() + 2 * g.resolution());
}

Grid1D dirichlet_sum(std::uint64_t n, unsigned resolution) {
  Grid1D shape(resolution);
  if (n > shape.size()) throw std::invalid_argument("dirichlet_sum: n exceeds 2^resolution");
  std::vector<std::int64_t> cells(shape.size(), 0);
  for (std::uint64_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < cells.size(); ++j) cells[j] += walsh_sign(k, j);
  }
  return Grid1D(resolution, std::move(cells));
}

std::vector<Grid2D> dyadic_averages_naive(const Grid2D& f) {
  const unsigned N = f.resolution();
  const std::size_t side = f.side();
  const auto& cells = f.cells();
  std::vector<Grid2D> out;
  for (unsigned k = 0; k <= N; ++k) {
    const std::size_t mask = (std::size_t{1} << k) - 1;
    std::vector<std::int64_t> averaged(f.size(), 0);
    for (std::size_t i = 0; i < side; ++i) {
      for (std::size_t j = 0; j < side; ++j) {
        // the block of (i, j) is every (s, t) with s ≡ i, t ≡ j mod 2^k
        std::int64_t sum = 0;
        for (std::size_t s = i & mask; s < side; s += mask + 1) {
          for (std::size_t t = j & mask; t < side; t += mask + 1) sum += cells[s * side + t];
        }
        averaged[i * side + j] = sum;
      }
    }
    out.emplace_back(N, std::move(averaged), f.exponent() + 2 * (N - k));
  }
  return out;
}

Grid2D maximal_function_naive(const Grid2D& f) {
  const auto averages = dyadic_averages_naive(f);
  const std::size_t size = f.size();
  std::vector<DyadicRational> best(size);
  for (const auto& level : averages) {
    for (std::size_t c = 0; c < size; ++c) {
      const DyadicRational v = abs(level[c]);
      if (v > best[c]) best[c] = v;
    }
  }
  // bring everything over one denominator
  std::uint64_t e = 0;
  for (const auto& v : best) e = std::max(e, v.exponent());
  std::vector<std::int64_t> out(size);
  for (std::size_t c = 0; c < size; ++c) {
    out[c] = best[c].times_pow2(static_cast<std::int64_t>(e)).numerator().convert_to<std::int64_t>();
  }
  return Grid2D(f.resolution(), std::move(out), e);
}

}  // namespace paley::reference
