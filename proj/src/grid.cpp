#include "paley/grid.hpp"

#include <cmath>
#include <vector>

#include "paley/detail/checked.hpp"
#include "paley/parallel.hpp"

namespace paley {
namespace {

constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

/// Cells of g rescaled to denominator 2^exponent (exponent >= g.exponent()).
template <GridType G>
std::vector<std::int64_t> aligned_cells(const G& g, std::uint64_t exponent) {
  const std::uint64_t shift = exponent - g.exponent();
  if (shift == 0) return g.cells();
  std::vector<std::int64_t> out(g.size());
  bool overflow = false;
  const auto& in = g.cells();
#pragma omp parallel for reduction(|| : overflow) if (in.size() > kParallelThreshold)
  for (std::size_t c = 0; c < in.size(); ++c) overflow = detail::shl_overflows(in[c], shift, out[c]) || overflow;
  if (overflow) throw std::overflow_error("grid: rescaling overflows int64 cells");
  return out;
}

template <GridType G>
void require_same_resolution(const G& a, const G& b, const char* what) {
  if (a.resolution() != b.resolution()) throw std::invalid_argument(std::string(what) + ": resolution mismatch");
}

template <GridType G, class Op>
G combine(const G& a, const G& b, Op op, const char* what) {
  require_same_resolution(a, b, what);
  const std::uint64_t e = std::max(a.exponent(), b.exponent());
  const auto lhs = aligned_cells(a, e);
  const auto rhs = aligned_cells(b, e);
  std::vector<std::int64_t> out(lhs.size());
  bool overflow = false;
#pragma omp parallel for reduction(|| : overflow) if (out.size() > kParallelThreshold)
  for (std::size_t c = 0; c < out.size(); ++c) overflow = op(lhs[c], rhs[c], out[c]) || overflow;
  if (overflow) throw std::overflow_error(std::string(what) + ": int64 overflow");
  return G(a.resolution(), std::move(out), e);
}

}  // namespace

template <GridType G>
G constant_grid(unsigned resolution, const DyadicRational& value) {
  const std::int64_t numerator = detail::to_int64(value.numerator());
  G shape(resolution);
  return G(resolution, std::vector<std::int64_t>(shape.size(), numerator), value.exponent());
}

template <GridType G>
DyadicRational integrate(const G& g) {
  return DyadicRational(exact_sum(g.cells()), g.exponent() + G::dimension * g.resolution());
}

template <GridType G>
DyadicRational l1_norm(const G& g) {
  return DyadicRational(exact_sum(g.cells(), true), g.exponent() + G::dimension * g.resolution());
}

template <GridType G>
double lp_norm(const G& g, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("lp_norm: p must be positive");
  const auto& cells = g.cells();
  const std::size_t chunks = (cells.size() + kReductionChunk - 1) / kReductionChunk;
  std::vector<double> partial(chunks, 0.0);
#pragma omp parallel for schedule(static) if (chunks > 1)
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = c * kReductionChunk;
    const std::size_t end = std::min(cells.size(), begin + kReductionChunk);
    double acc = 0.0;
    for (std::size_t i = begin; i < end; ++i) acc += std::pow(std::fabs(static_cast<double>(cells[i])), p);
    partial[c] = acc;
  }
  double total = 0.0;
  for (const double v : partial) total += v;
  const double mean = total / static_cast<double>(cells.size());
  return std::ldexp(std::pow(mean, 1.0 / p), -static_cast<int>(g.exponent()));
}

template <GridType G>
G add(const G& a, const G& b) {
  return combine(a, b, detail::add_overflows, "add");
}

template <GridType G>
G subtract(const G& a, const G& b) {
  return combine(a, b, detail::sub_overflows, "subtract");
}

template <GridType G>
G multiply(const G& a, const G& b) {
  require_same_resolution(a, b, "multiply");
  const auto& lhs = a.cells();
  const auto& rhs = b.cells();
  std::vector<std::int64_t> out(lhs.size());
  bool overflow = false;
#pragma omp parallel for reduction(|| : overflow) if (out.size() > kParallelThreshold)
  for (std::size_t c = 0; c < out.size(); ++c) overflow = detail::mul_overflows(lhs[c], rhs[c], out[c]) || overflow;
  if (overflow) throw std::overflow_error("multiply: int64 overflow");
  return G(a.resolution(), std::move(out), a.exponent() + b.exponent());
}

template <GridType G>
G absolute(const G& g) {
  std::vector<std::int64_t> out = g.cells();
  for (auto& c : out) {
    if (c == INT64_MIN) throw std::overflow_error("absolute: int64 overflow");
    c = c < 0 ? -c : c;
  }
  return G(g.resolution(), std::move(out), g.exponent());
}

template <GridType G>
G scale(const G& g, const DyadicRational& factor) {
  const std::int64_t k = detail::to_int64(factor.numerator());
  std::vector<std::int64_t> out(g.size());
  bool overflow = false;
  const auto& in = g.cells();
#pragma omp parallel for reduction(|| : overflow) if (out.size() > kParallelThreshold)
  for (std::size_t c = 0; c < out.size(); ++c) overflow = detail::mul_overflows(in[c], k, out[c]) || overflow;
  if (overflow) throw std::overflow_error("scale: int64 overflow");
  return G(g.resolution(), std::move(out), g.exponent() + factor.exponent());
}

template <GridType G>
G refine(const G& g, unsigned target) {
  if (target < g.resolution()) throw std::invalid_argument("refine: target resolution below current resolution");
  if (target == g.resolution()) return g;
  const G shape(target);
  std::vector<std::int64_t> out(shape.size());
  const auto& in = g.cells();
  const std::size_t old_mask = g.side() - 1;
  if constexpr (G::dimension == 1) {
    // sub-cells of cell j are j + t * 2^N: the low N bits are kept
#pragma omp parallel for if (out.size() > kParallelThreshold)
    for (std::size_t c = 0; c < out.size(); ++c) out[c] = in[c & old_mask];
  } else {
    const std::size_t old_side = g.side();
    const std::size_t new_side = shape.side();
#pragma omp parallel for if (out.size() > kParallelThreshold)
    for (std::size_t i = 0; i < new_side; ++i) {
      const std::int64_t* src = in.data() + (i & old_mask) * old_side;
      std::int64_t* dst = out.data() + i * new_side;
      for (std::size_t j = 0; j < new_side; ++j) dst[j] = src[j & old_mask];
    }
  }
  return G(target, std::move(out), g.exponent());
}

Grid2D tensor(const Grid1D& a, const Grid1D& b) {
  if (a.resolution() != b.resolution()) throw std::invalid_argument("tensor: resolution mismatch");
  const std::size_t side = a.side();
  std::vector<std::int64_t> out(side * side);
  bool overflow = false;
  const auto& x = a.cells();
  const auto& y = b.cells();
#pragma omp parallel for reduction(|| : overflow) if (out.size() > kParallelThreshold)
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) overflow = detail::mul_overflows(x[i], y[j], out[i * side + j]) || overflow;
  }
  if (overflow) throw std::overflow_error("tensor: int64 overflow");
  return Grid2D(a.resolution(), std::move(out), a.exponent() + b.exponent());
}

#define PALEY_INSTANTIATE_GRID_OPS(G)                                 \
  template G constant_grid<G>(unsigned, const DyadicRational&);       \
  template DyadicRational integrate<G>(const G&);                     \
  template DyadicRational l1_norm<G>(const G&);                       \
  template double lp_norm<G>(const G&, double);                       \
  template G add<G>(const G&, const G&);                              \
  template G subtract<G>(const G&, const G&);                         \
  template G multiply<G>(const G&, const G&);                         \
  template G absolute<G>(const G&);                                   \
  template G scale<G>(const G&, const DyadicRational&);               \
  template G refine<G>(const G&, unsigned);

PALEY_INSTANTIATE_GRID_OPS(Grid1D)
PALEY_INSTANTIATE_GRID_OPS(Grid2D)

#undef PALEY_INSTANTIATE_GRID_OPS

}  // namespace paley
