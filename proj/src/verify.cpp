#include "paley/verify.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

#include "paley/bitops.hpp"
#include "paley/hardy.hpp"
#include "paley/kernels.hpp"
#include "paley/reference.hpp"
#include "paley/strong.hpp"
#include "paley/walsh.hpp"

namespace paley {
namespace {

using Rng = std::mt19937_64;

std::int64_t draw(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

template <GridType G>
G random_grid(Rng& rng, unsigned resolution, std::int64_t lo = -9, std::int64_t hi = 9) {
  G shape(resolution);
  std::vector<std::int64_t> cells(shape.size());
  for (auto& c : cells) c = draw(rng, lo, hi);
  return G(resolution, std::move(cells));
}

class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  void check(const std::string& check_name, bool passed, std::string detail = {}) {
    results_.push_back({name_, check_name, passed, std::move(detail)});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string name_;
  std::vector<CheckResult> results_;
};

std::vector<CheckResult> bitops_suite() {
  Suite s("bitops");
  bool order_ok = true;
  bool variation_bounds = true;
  bool variation_edges = true;
  for (std::uint64_t n = 1; n <= (1U << 16); ++n) {
    const unsigned o = order(n);
    order_ok = order_ok && (std::uint64_t{1} << o) <= n && n < (std::uint64_t{1} << (o + 1));
    const unsigned v = variation(n);
    variation_bounds = variation_bounds && v >= 2 && v <= o + 2;
    // sign changes of the digit sequence padded with a 0 on both ends
    const BinaryDigits d(n);
    unsigned changes = 0;
    int previous = 0;
    for (std::size_t k = 0; k <= d.size(); ++k) {
      changes += static_cast<unsigned>(d[k] != previous);
      previous = d[k];
    }
    variation_edges = variation_edges && changes == v;
  }
  s.check("order_brackets_n", order_ok, "1 <= n <= 2^16");
  s.check("variation_bounds", variation_bounds, "2 <= V(n) <= |n| + 2, n <= 2^16");
  s.check("variation_counts_digit_edges", variation_edges, "n <= 2^16");
  const auto sums = variation_prefix_sums(4);
  s.check("prefix_sums_small", sums == std::vector<BigInt>{2, 4, 6, 8}, "V(1..4) prefix sums = 2,4,6,8");
  return s.take();
}

std::vector<CheckResult> dyadic_suite() {
  Suite s("dyadic");
  Rng rng(0x5eed0001);
  bool refine_ok = true;
  bool triangle_ok = true;
  bool zero_ok = true;
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned N = static_cast<unsigned>(trial % 9);
    const auto a = random_grid<Grid1D>(rng, N);
    const auto b = random_grid<Grid1D>(rng, N);
    const unsigned dN = static_cast<unsigned>(trial % 5);
    refine_ok = refine_ok && integrate(refine(a, N + dN)) == integrate(a) && l1_norm(refine(a, N + dN)) == l1_norm(a);
    triangle_ok = triangle_ok && l1_norm(add(a, b)) <= l1_norm(a) + l1_norm(b);
    zero_ok = zero_ok && ((l1_norm(a) == DyadicRational(0)) == a.is_zero());
  }
  s.check("refine_invariance", refine_ok, "40 random grids, dN <= 4");
  s.check("triangle_inequality", triangle_ok, "40 random pairs, N <= 8");
  s.check("l1_zero_iff_zero_grid", zero_ok && l1_norm(Grid2D(3)) == DyadicRational(0));
  bool tensor_ok = true;
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned N = static_cast<unsigned>(trial % 7);
    const auto a = random_grid<Grid1D>(rng, N);
    const auto b = random_grid<Grid1D>(rng, N);
    tensor_ok = tensor_ok && l1_norm(tensor(a, b)) == l1_norm(a) * l1_norm(b);
  }
  s.check("tensor_l1_multiplicative", tensor_ok, "30 random pairs, N <= 6");
  return s.take();
}

std::vector<CheckResult> walsh_suite() {
  Suite s("walsh");
  Rng rng(0x5eed0002);
  bool parseval1 = true;
  bool roundtrip1 = true;
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned N = static_cast<unsigned>(trial % 9);
    const auto g = random_grid<Grid1D>(rng, N);
    const auto spectrum = analyze(g);
    DyadicRational energy;
    for (std::size_t i = 0; i < spectrum.size(); ++i) energy += spectrum[i] * spectrum[i];
    parseval1 = parseval1 && energy == integrate(multiply(g, g));
    roundtrip1 = roundtrip1 && synthesize(spectrum) == g;
  }
  bool parseval2 = true;
  bool roundtrip2 = true;
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned N = static_cast<unsigned>(trial % 6);
    const auto g = random_grid<Grid2D>(rng, N);
    const auto spectrum = analyze(g);
    DyadicRational energy;
    for (std::size_t i = 0; i < spectrum.size(); ++i) energy += spectrum[i] * spectrum[i];
    parseval2 = parseval2 && energy == integrate(multiply(g, g));
    roundtrip2 = roundtrip2 && synthesize(spectrum) == g;
  }
  s.check("parseval_1d", parseval1, "100 random grids, N <= 8");
  s.check("roundtrip_1d", roundtrip1, "100 random grids, N <= 8");
  s.check("parseval_2d", parseval2, "100 random grids, N <= 5");
  s.check("roundtrip_2d", roundtrip2, "100 random grids, N <= 5");

  bool butterfly = true;
  for (unsigned N = 0; N <= 6; ++N) {
    const auto g1 = random_grid<Grid1D>(rng, N);
    butterfly = butterfly && analyze(g1) == reference::analyze_naive(g1);
    if (N <= 4) {
      const auto g2 = random_grid<Grid2D>(rng, N);
      butterfly = butterfly && analyze(g2) == reference::analyze_naive(g2);
    }
  }
  s.check("butterfly_matches_inner_products", butterfly, "1D N <= 6, 2D N <= 4");

  bool ortho = true;
  bool characters = true;
  std::vector<Grid1D> w;
  for (std::uint64_t m = 0; m < 64; ++m) w.push_back(walsh_function(m, 6));
  for (std::uint64_t m = 0; m < 64; ++m) {
    for (std::uint64_t n = 0; n < 64; ++n) {
      const auto product = multiply(w[m], w[n]);
      ortho = ortho && integrate(product) == DyadicRational(m == n ? 1 : 0);
      characters = characters && product == w[m ^ n];
    }
  }
  s.check("orthonormality", ortho, "m, n < 64");
  s.check("character_multiplicativity", characters, "w_m w_n = w_{m xor n}, m, n < 64");

  bool averages = true;
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned N = static_cast<unsigned>(trial % 7);
    const auto g = random_grid<Grid2D>(rng, N);
    const auto levels = dyadic_averages(g);
    for (unsigned k = 0; k <= N; ++k) {
      averages = averages && levels[k] == partial_sum(g, std::uint64_t{1} << k, std::uint64_t{1} << k);
    }
  }
  s.check("dyadic_averages_equal_partial_sums", averages, "20 random grids, N <= 6");
  return s.take();
}

std::vector<CheckResult> kernels_suite() {
  Suite s("kernels");
  bool equivalence = true;
  for (std::uint64_t n = 1; n <= 4096; ++n) {
    const unsigned N = ceil_log2(n);
    equivalence = equivalence && dirichlet_direct(n, N) == dirichlet_recursive(n, N);
  }
  s.check("direct_equals_recursive", equivalence, "1 <= n <= 4096, minimal resolution");

  bool literal = true;
  for (std::uint64_t n = 0; n <= 256; ++n) literal = literal && dirichlet_direct(n, 8) == reference::dirichlet_sum(n, 8);
  s.check("direct_equals_literal_sum", literal, "0 <= n <= 256, N = 8");

  bool closed = true;
  for (unsigned m = 0; m <= 20; ++m) closed = closed && dirichlet_recursive(std::uint64_t{1} << m, m) == dirichlet_closed_form(m, m);
  for (unsigned m = 0; m <= 12; ++m) closed = closed && dirichlet_direct(std::uint64_t{1} << m, m) == dirichlet_closed_form(m, m);
  s.check("power_of_two_closed_form", closed, "recursive m <= 20, direct m <= 12");

  const auto sweep = lebesgue_sweep(4096);
  std::size_t violations = 0;
  for (const auto& r : sweep.records) violations += static_cast<std::size_t>(!r.lower_ok || !r.upper_ok);
  s.check("lebesgue_two_sided_bound", violations == 0, fmt::format("n <= 4096, {} violations", violations));

  const LebesgueTable table(12);
  bool table_ok = true;
  for (std::uint64_t n = 1; n <= 4096; ++n) table_ok = table_ok && table[n] == sweep.records[n - 1].constant;
  s.check("norm_recursion_matches_grids", table_ok, "n <= 4096");

  bool spectrum_ok = true;
  for (std::uint64_t n = 0; n <= 256; ++n) {
    const auto spectrum = analyze(dirichlet_recursive(n, 8));
    for (std::size_t i = 0; i < spectrum.size(); ++i) spectrum_ok = spectrum_ok && spectrum[i] == DyadicRational(i < n ? 1 : 0);
  }
  s.check("dirichlet_spectrum_is_indicator", spectrum_ok, "n <= 256");
  return s.take();
}

std::vector<CheckResult> hardy_suite() {
  Suite s("hardy");
  bool unit = true;
  for (unsigned n = 0; n <= 8; ++n) {
    const auto report = h1_norm(counterexample(n));
    unit = unit && report.h1 == DyadicRational(1) && report.l1 == DyadicRational(1);
  }
  s.check("counterexample_unit_h1", unit, "n <= 8");

  Rng rng(0x5eed0003);
  bool dominates = true;
  bool homogeneous = true;
  bool pyramid = true;
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned N = static_cast<unsigned>(trial % 6);
    const auto g = random_grid<Grid2D>(rng, N);
    const auto report = h1_norm(g);
    dominates = dominates && report.h1 >= report.l1;
    const DyadicRational c(BigInt(draw(rng, -7, 7)), static_cast<std::uint64_t>(trial % 4));
    homogeneous = homogeneous && h1_norm(scale(g, c)).h1 == abs(c) * report.h1;
    if (N <= 4) pyramid = pyramid && report.maximal == reference::maximal_function_naive(g);
  }
  s.check("h1_dominates_l1", dominates, "30 random 2D grids, N <= 5");
  s.check("h1_homogeneous", homogeneous, "dyadic-rational scalars");
  s.check("maximal_matches_block_enumeration", pyramid, "N <= 4");
  return s.take();
}

std::vector<CheckResult> strong_suite() {
  Suite s("strong");
  bool pattern = true;
  for (unsigned n = 0; n <= 8; ++n) {
    const auto spectrum = analyze(counterexample(n));
    const std::size_t low = std::size_t{1} << n;
    for (std::size_t i = 0; i < spectrum.side(); ++i) {
      for (std::size_t j = 0; j < spectrum.side(); ++j) {
        const bool inside = i >= low && i < 2 * low && j >= low && j < 2 * low;
        pattern = pattern && spectrum.at(i, j) == DyadicRational(inside ? 1 : 0);
      }
    }
  }
  s.check("counterexample_spectrum_pattern", pattern, "n <= 8");

  bool identity = true;
  bool vanishing = true;
  for (unsigned n = 0; n <= 6; ++n) {
    const auto f = counterexample(n);
    const auto spectrum = analyze(f);
    const std::uint64_t low = std::uint64_t{1} << n;
    for (std::uint64_t k = 0; k <= low; ++k) vanishing = vanishing && partial_sum_from(spectrum, k, k).is_zero();
    for (std::uint64_t k = low + 1; k <= 2 * low; ++k) {
      const auto fast = partial_sum_from(spectrum, k, k);
      identity = identity && fast == closed_form_partial_sum(n, k) && l1_norm(fast) == snn_norm(n, k);
    }
  }
  s.check("closed_form_partial_sums", identity, "n <= 6, all 2^n < k <= 2^(n+1)");
  s.check("partial_sums_vanish_below_block", vanishing, "n <= 6, k <= 2^n");

  bool lower_bound = true;
  for (unsigned n = 0; n <= 12; ++n) {
    const std::uint64_t low = std::uint64_t{1} << n;
    for (std::uint64_t k = low + 1; k <= 2 * low; ++k) {
      const unsigned v = variation(k - low);
      lower_bound = lower_bound && snn_norm(n, k).times_pow2(6) >= DyadicRational(static_cast<std::int64_t>(v) * v);
    }
  }
  s.check("partial_sum_norm_lower_bound", lower_bound, "64 ‖S_kk f_nn‖_1 >= V(k-2^n)^2, n <= 12");

  const auto log_records = divergence_sweep(6, 13, WeightFunction::log(), LogBase::natural);
  bool ratio_band = true;
  bool nondecreasing = true;
  for (std::size_t i = 0; i < log_records.size(); ++i) {
    ratio_band = ratio_band && log_records[i].ratio >= 0.02;
    if (i > 0) nondecreasing = nondecreasing && log_records[i].block_sum >= log_records[i - 1].block_sum;
  }
  s.check("log_weight_diverges", ratio_band && nondecreasing, "n = 6..13: ratio >= 0.02, block sums nondecreasing");

  const auto unit_records = divergence_sweep(4, 12, WeightFunction::one(), LogBase::natural);
  double lo = unit_records.front().block_sum;
  double hi = lo;
  for (const auto& r : unit_records) {
    lo = std::min(lo, r.block_sum);
    hi = std::max(hi, r.block_sum);
  }
  s.check("unit_weight_bounded", hi / lo < 3.0, fmt::format("n = 4..12: max/min = {:.6f}", hi / lo));

  bool cs = true;
  for (unsigned n = 1; n <= 20; ++n) {
    const auto sides = cauchy_schwarz_sides(n);
    const bool equality = sides.lhs == sides.rhs;
    cs = cs && sides.lhs <= sides.rhs && equality == (n <= 2);
  }
  s.check("cauchy_schwarz_step", cs, "n <= 20, equality exactly at n = 1, 2");

  const auto fine_v = fine_ratios(std::uint64_t{1} << 20, FineVariant::variation);
  const auto fine_l = fine_ratios(std::uint64_t{1} << 16, FineVariant::lebesgue);
  auto at = [](const std::vector<FineCheckpoint>& cps, std::uint64_t n) {
    for (const auto& cp : cps)
      if (cp.n == n) return cp.ratio;
    throw std::logic_error("missing checkpoint");
  };
  const double v18 = at(fine_v, std::uint64_t{1} << 18);
  const double v20 = at(fine_v, std::uint64_t{1} << 20);
  const double l14 = at(fine_l, std::uint64_t{1} << 14);
  const double l16 = at(fine_l, std::uint64_t{1} << 16);
  const bool fine_ok = std::fabs(v20 - v18) / v20 < 0.05 && std::fabs(l16 - l14) / l16 < 0.08 && v20 > 0.2 &&
                       v20 < 1.0 && l16 > 0.2 && l16 < 1.0;
  s.check("fine_ratios_converge", fine_ok, fmt::format("variation {:.6f}, lebesgue {:.6f}", v20, l16));

  Rng rng(0x5eed0004);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_grid<Grid1D>(rng, 8);
    const auto h1 = h1_norm(f).h1;
    if (h1.is_zero()) continue;
    worst = std::max(worst, simon_sum_1d(f, 256, LogBase::natural) / h1.to_double());
  }
  s.check("simon_weighted_sum_bounded", worst <= 8.0, fmt::format("max ratio {:.6f} over 100 grids, N = 8", worst));

  bool sums_match = true;
  for (unsigned n = 0; n <= 5; ++n) {
    const double direct = theorem_g_sum(counterexample(n), std::uint64_t{2} << n, LogBase::natural);
    const double block = divergence_sweep(n, n, WeightFunction::one(), LogBase::natural).front().block_sum;
    sums_match = sums_match && std::fabs(direct - block) <= 1e-12 * block;
  }
  s.check("theorem_g_sum_matches_block_sum", sums_match, "n <= 5");
  return s.take();
}

const std::vector<std::pair<std::string, std::function<std::vector<CheckResult>()>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<std::vector<CheckResult>()>>> suites = {
      {"bitops", bitops_suite}, {"dyadic", dyadic_suite}, {"walsh", walsh_suite},
      {"kernels", kernels_suite}, {"hardy", hardy_suite}, {"strong", strong_suite},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<CheckResult> run_verify_suite(const std::string& suite) {
  std::vector<CheckResult> results;
  bool found = false;
  for (const auto& [name, fn] : registry()) {
    if (suite == "all" || suite == name) {
      found = true;
      auto part = fn();
      results.insert(results.end(), part.begin(), part.end());
    }
  }
  if (!found) throw std::invalid_argument("unknown verify suite: " + suite);
  return results;
}

void write_verify_report(std::ostream& out, const std::vector<CheckResult>& results) {
  std::size_t failed = 0;
  for (const auto& r : results) {
    failed += static_cast<std::size_t>(!r.passed);
    out << (r.passed ? "PASS " : "FAIL ") << r.suite << '.' << r.name;
    if (!r.detail.empty()) out << ": " << r.detail;
    out << '\n';
  }
  out << fmt::format("summary: {} passed, {} failed\n", results.size() - failed, failed);
}

}  // namespace paley
