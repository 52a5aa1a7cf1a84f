#include "paley/hardy.hpp"

#include "paley/walsh.hpp"

namespace paley {
namespace {

constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

inline std::int64_t magnitude(std::int64_t v) { return v < 0 ? -v : v; }

template <GridType G>
HardyReport<G> report_for(const G& f) {
  G maximal = maximal_function(f);
  DyadicRational h1 = l1_norm(maximal);
  return HardyReport<G>{l1_norm(f), std::move(h1), std::move(maximal)};
}

}  // namespace

Grid1D maximal_function(const Grid1D& f) {
  const BlockSums<1> sums = block_sums(f);
  const unsigned N = sums.resolution;
  // running[c] = max_{k' <= k} |A_k'(c)| 2^k', all over the denominator 2^(N + exponent)
  std::vector<std::int64_t> running{magnitude(sums.levels[0][0])};
  for (unsigned k = 1; k <= N; ++k) {
    const std::size_t size = std::size_t{1} << k;
    const std::size_t parent_mask = size / 2 - 1;
    const auto& level = sums.levels[k];
    std::vector<std::int64_t> next(size);
#pragma omp parallel for if (size > kParallelThreshold)
    for (std::size_t c = 0; c < size; ++c) {
      next[c] = std::max(running[c & parent_mask], magnitude(level[c]) << k);
    }
    running = std::move(next);
  }
  return Grid1D(N, std::move(running), sums.exponent + N);
}

Grid2D maximal_function(const Grid2D& f) {
  const BlockSums<2> sums = block_sums(f);
  const unsigned N = sums.resolution;
  std::vector<std::int64_t> running{magnitude(sums.levels[0][0])};
  for (unsigned k = 1; k <= N; ++k) {
    const std::size_t side = std::size_t{1} << k;
    const std::size_t half = side / 2;
    const auto& level = sums.levels[k];
    std::vector<std::int64_t> next(side * side);
#pragma omp parallel for if (side * side > kParallelThreshold)
    for (std::size_t a = 0; a < side; ++a) {
      const std::int64_t* parent = running.data() + (a & (half - 1)) * half;
      for (std::size_t b = 0; b < side; ++b) {
        next[a * side + b] = std::max(parent[b & (half - 1)], magnitude(level[a * side + b]) << (2 * k));
      }
    }
    running = std::move(next);
  }
  return Grid2D(N, std::move(running), sums.exponent + 2 * N);
}

HardyReport<Grid1D> h1_norm(const Grid1D& f) { return report_for(f); }

HardyReport<Grid2D> h1_norm(const Grid2D& f) { return report_for(f); }

}  // namespace paley
