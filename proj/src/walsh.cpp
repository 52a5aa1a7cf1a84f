#include "paley/walsh.hpp"

#include <bit>
#include <stdexcept>

#include "paley/detail/checked.hpp"
#include "paley/transform.hpp"

namespace paley {
namespace {

constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

}  // namespace

Grid1D rademacher(unsigned k, unsigned resolution) {
  if (k >= resolution) throw std::invalid_argument("rademacher: k must be below the resolution");
  Grid1D shape(resolution);
  std::vector<std::int64_t> cells(shape.size());
  for (std::size_t j = 0; j < cells.size(); ++j) cells[j] = ((j >> k) & 1U) ? -1 : 1;
  return Grid1D(resolution, std::move(cells));
}

Grid1D walsh_function(std::uint64_t n, unsigned resolution) {
  Grid1D shape(resolution);
  if (n >= shape.size()) throw std::invalid_argument("walsh_function: n must be below 2^resolution");
  std::vector<std::int64_t> cells(shape.size());
#pragma omp parallel for if (cells.size() > kParallelThreshold)
  for (std::size_t j = 0; j < cells.size(); ++j) cells[j] = (std::popcount(n & j) & 1) ? -1 : 1;
  return Grid1D(resolution, std::move(cells));
}

Spectrum1D analyze(const Grid1D& g) {
  detail::require_headroom(g.max_abs_numerator(), g.resolution(), "analyze: transform would overflow int64");
  std::vector<std::int64_t> cells = g.cells();
  fwht(cells);
  return Spectrum1D(g.resolution(), std::move(cells), g.exponent() + g.resolution());
}

Spectrum2D analyze(const Grid2D& g) {
  detail::require_headroom(g.max_abs_numerator(), 2 * g.resolution(), "analyze: transform would overflow int64");
  std::vector<std::int64_t> cells = g.cells();
  fwht_2d(cells, g.side());
  return Spectrum2D(g.resolution(), std::move(cells), g.exponent() + 2 * g.resolution());
}

Grid1D synthesize(const Spectrum1D& s) {
  detail::require_headroom(s.max_abs_numerator(), s.resolution(), "synthesize: transform would overflow int64");
  std::vector<std::int64_t> cells = s.cells();
  fwht(cells);
  return Grid1D(s.resolution(), std::move(cells), s.exponent());
}

Grid2D synthesize(const Spectrum2D& s) {
  detail::require_headroom(s.max_abs_numerator(), 2 * s.resolution(), "synthesize: transform would overflow int64");
  std::vector<std::int64_t> cells = s.cells();
  fwht_2d(cells, s.side());
  return Grid2D(s.resolution(), std::move(cells), s.exponent());
}

Grid1D partial_sum_from(const Spectrum1D& spectrum, std::uint64_t k) {
  if (k > spectrum.size()) throw std::invalid_argument("partial_sum: index exceeds 2^resolution");
  std::vector<std::int64_t> cells = spectrum.cells();
  std::fill(cells.begin() + static_cast<std::ptrdiff_t>(k), cells.end(), 0);
  return synthesize(Spectrum1D(spectrum.resolution(), std::move(cells), spectrum.exponent()));
}

Grid2D partial_sum_from(const Spectrum2D& spectrum, std::uint64_t m, std::uint64_t n) {
  const std::size_t side = spectrum.side();
  if (m > side || n > side) throw std::invalid_argument("partial_sum: index exceeds 2^resolution");
  std::vector<std::int64_t> cells = spectrum.cells();
  for (std::size_t i = 0; i < side; ++i) {
    auto row = cells.begin() + static_cast<std::ptrdiff_t>(i * side);
    if (i >= m) {
      std::fill(row, row + static_cast<std::ptrdiff_t>(side), 0);
    } else {
      std::fill(row + static_cast<std::ptrdiff_t>(n), row + static_cast<std::ptrdiff_t>(side), 0);
    }
  }
  return synthesize(Spectrum2D(spectrum.resolution(), std::move(cells), spectrum.exponent()));
}

Grid1D partial_sum(const Grid1D& f, std::uint64_t k) {
  if (k > f.size()) throw std::invalid_argument("partial_sum: index exceeds 2^resolution");
  return partial_sum_from(analyze(f), k);
}

Grid2D partial_sum(const Grid2D& f, std::uint64_t m, std::uint64_t n) {
  if (m > f.side() || n > f.side()) throw std::invalid_argument("partial_sum: index exceeds 2^resolution");
  return partial_sum_from(analyze(f), m, n);
}

BlockSums<1> block_sums(const Grid1D& f) {
  const unsigned N = f.resolution();
  detail::require_headroom(f.max_abs_numerator(), N, "block_sums: sums would overflow int64");
  BlockSums<1> out{N, f.exponent(), std::vector<std::vector<std::int64_t>>(N + 1)};
  out.levels[N] = f.cells();
  for (unsigned k = N; k > 0; --k) {
    const std::size_t half = std::size_t{1} << (k - 1);
    const auto& fine = out.levels[k];
    auto& coarse = out.levels[k - 1];
    coarse.resize(half);
#pragma omp parallel for if (half > kParallelThreshold)
    for (std::size_t a = 0; a < half; ++a) coarse[a] = fine[a] + fine[a + half];
  }
  return out;
}

BlockSums<2> block_sums(const Grid2D& f) {
  const unsigned N = f.resolution();
  detail::require_headroom(f.max_abs_numerator(), 2 * N, "block_sums: sums would overflow int64");
  BlockSums<2> out{N, f.exponent(), std::vector<std::vector<std::int64_t>>(N + 1)};
  out.levels[N] = f.cells();
  for (unsigned k = N; k > 0; --k) {
    const std::size_t fine_side = std::size_t{1} << k;
    const std::size_t half = fine_side / 2;
    const auto& fine = out.levels[k];
    auto& coarse = out.levels[k - 1];
    coarse.resize(half * half);
#pragma omp parallel for if (half * half > kParallelThreshold)
    for (std::size_t a = 0; a < half; ++a) {
      const std::int64_t* r0 = fine.data() + a * fine_side;
      const std::int64_t* r1 = fine.data() + (a + half) * fine_side;
      for (std::size_t b = 0; b < half; ++b) coarse[a * half + b] = r0[b] + r0[b + half] + r1[b] + r1[b + half];
    }
  }
  return out;
}

namespace {

template <class G, int Dim>
std::vector<G> averages_from(const BlockSums<Dim>& sums) {
  const unsigned N = sums.resolution;
  std::vector<G> out;
  out.reserve(N + 1);
  for (unsigned k = 0; k <= N; ++k) {
    const G coarse(k, sums.levels[k], sums.exponent + static_cast<std::uint64_t>(Dim) * (N - k));
    out.push_back(refine(coarse, N));
  }
  return out;
}

}  // namespace

std::vector<Grid1D> dyadic_averages(const Grid1D& f) { return averages_from<Grid1D>(block_sums(f)); }

std::vector<Grid2D> dyadic_averages(const Grid2D& f) { return averages_from<Grid2D>(block_sums(f)); }

}  // namespace paley
