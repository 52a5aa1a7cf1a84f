#include "paley/kernels.hpp"

#include <bit>
#include <stdexcept>

#include "paley/bitops.hpp"
#include "paley/walsh.hpp"

namespace paley {
namespace {

constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

void require_representable(std::uint64_t n, unsigned resolution, const char* what) {
  if (resolution > Grid1D::max_resolution || n > (std::uint64_t{1} << resolution)) {
    throw std::invalid_argument(std::string(what) + ": n exceeds 2^resolution");
  }
}

/// D_n at cell j by the digit recursion, innermost digit first.
inline std::int64_t dirichlet_cell(std::uint64_t n, std::uint64_t j) {
  std::int64_t acc = 0;  // D_0
  for (std::uint64_t rest = n; rest != 0; rest &= rest - 1) {
    const unsigned l = static_cast<unsigned>(std::countr_zero(rest));
    const std::uint64_t block = std::uint64_t{1} << l;
    const std::int64_t closed = (j & (block - 1)) == 0 ? static_cast<std::int64_t>(block) : 0;
    acc = closed + (((j >> l) & 1U) ? -acc : acc);
  }
  return acc;
}

/// sum_j |D_n(j)| at the given resolution, without materializing the grid.
std::int64_t dirichlet_abs_sum(std::uint64_t n, unsigned resolution) {
  const std::uint64_t cells = std::uint64_t{1} << resolution;
  std::int64_t total = 0;
  for (std::uint64_t j = 0; j < cells; ++j) {
    const std::int64_t v = dirichlet_cell(n, j);
    total += v < 0 ? -v : v;
  }
  return total;
}

}  // namespace

Grid1D dirichlet_closed_form(unsigned m, unsigned resolution) {
  if (m > resolution) throw std::invalid_argument("dirichlet_closed_form: m exceeds resolution");
  Grid1D shape(resolution);
  std::vector<std::int64_t> cells(shape.size(), 0);
  const std::size_t block = std::size_t{1} << m;
  for (std::size_t j = 0; j < cells.size(); j += block) cells[j] = static_cast<std::int64_t>(block);
  return Grid1D(resolution, std::move(cells));
}

Grid1D dirichlet_direct(std::uint64_t n, unsigned resolution) {
  require_representable(n, resolution, "dirichlet_direct");
  Spectrum1D shape(resolution);
  std::vector<std::int64_t> ones(shape.size(), 0);
  std::fill(ones.begin(), ones.begin() + static_cast<std::ptrdiff_t>(n), 1);
  return synthesize(Spectrum1D(resolution, std::move(ones)));
}

Grid1D dirichlet_recursive(std::uint64_t n, unsigned resolution) {
  require_representable(n, resolution, "dirichlet_recursive");
  Grid1D shape(resolution);
  std::vector<std::int64_t> cells(shape.size());
#pragma omp parallel for if (cells.size() > kParallelThreshold)
  for (std::size_t j = 0; j < cells.size(); ++j) cells[j] = dirichlet_cell(n, j);
  return Grid1D(resolution, std::move(cells));
}

DyadicRational lebesgue_constant(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("lebesgue_constant: n must be positive");
  const unsigned resolution = ceil_log2(n);
  return l1_norm(dirichlet_recursive(n, resolution));
}

LebesgueSweep lebesgue_sweep(std::uint64_t n_max) {
  if (n_max == 0) throw std::invalid_argument("lebesgue_sweep: n_max must be positive");
  if (ceil_log2(n_max) > Grid1D::max_resolution) throw std::invalid_argument("lebesgue_sweep: n_max too large");
  std::vector<std::int64_t> abs_sums(n_max);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::uint64_t n = 1; n <= n_max; ++n) abs_sums[n - 1] = dirichlet_abs_sum(n, ceil_log2(n));

  LebesgueSweep sweep;
  sweep.records.reserve(n_max);
  sweep.prefix_sums.reserve(n_max);
  DyadicRational running;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    LebesgueRecord r;
    r.n = n;
    r.variation = variation(n);
    r.constant = DyadicRational(BigInt(abs_sums[n - 1]), ceil_log2(n));
    r.constant_float = r.constant.to_double();
    r.lower_ok = r.constant.times_pow2(3) >= DyadicRational(static_cast<std::int64_t>(r.variation));
    r.upper_ok = r.constant <= DyadicRational(static_cast<std::int64_t>(r.variation));
    running += r.constant;
    sweep.prefix_sums.push_back(running);
    sweep.records.push_back(std::move(r));
  }
  return sweep;
}

LebesgueTable::LebesgueTable(unsigned resolution) : resolution_(resolution) {
  if (resolution > Grid1D::max_resolution) throw std::invalid_argument("LebesgueTable: resolution too large");
  const std::uint64_t size = (std::uint64_t{1} << resolution) + 1;
  const std::int64_t one = std::int64_t{1} << resolution;
  scaled_.assign(size, 0);
  for (std::uint64_t n = 1; n < size; ++n) {
    const unsigned l = order(n);
    const std::uint64_t m = n - (std::uint64_t{1} << l);
    scaled_[n] = scaled_[m] + one - static_cast<std::int64_t>(m << (resolution - l));
  }
}

DyadicRational LebesgueTable::operator[](std::uint64_t n) const { return DyadicRational(BigInt(scaled_.at(n)), resolution_); }

}  // namespace paley
