#include "paley/strong.hpp"

#include <bit>
#include <cmath>
#include <optional>
#include <stdexcept>

#include <fmt/format.h>

#include "paley/bitops.hpp"
#include "paley/detail/checked.hpp"
#include "paley/errors.hpp"
#include "paley/kernels.hpp"
#include "paley/parallel.hpp"
#include "paley/walsh.hpp"

namespace paley {

double log_in(LogBase base, double x) { return base == LogBase::natural ? std::log(x) : std::log2(x); }

std::string to_string(LogBase base) { return base == LogBase::natural ? "e" : "2"; }

std::string to_string(NormPath path) { return path == NormPath::shortcut ? "1d" : "2d"; }

WeightFunction WeightFunction::power(double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("power weight: alpha must be finite and >= 0");
  return WeightFunction(Kind::power, alpha);
}

std::string WeightFunction::name() const {
  switch (kind_) {
    case Kind::one:
      return "one";
    case Kind::log:
      return "log";
    case Kind::loglog:
      return "loglog";
    case Kind::power:
      return fmt::format("power({})", alpha_);
  }
  return "?";
}

double WeightFunction::operator()(std::uint64_t t) const {
  const double x = static_cast<double>(t);
  switch (kind_) {
    case Kind::one:
      return 1.0;
    case Kind::log:
      return std::max(1.0, std::log(x));
    case Kind::loglog:
      return std::max(1.0, std::log(std::log(x + 16.0)));
    case Kind::power:
      return std::pow(1.0 + x, alpha_);
  }
  return 1.0;
}

bool WeightFunction::unbounded() const { return kind_ != Kind::one && !(kind_ == Kind::power && alpha_ == 0.0); }

bool WeightFunction::validate(std::uint64_t t_max) const {
  double previous = (*this)(1);
  if (!(previous >= 1.0)) return false;
  for (std::uint64_t t = 2; t <= t_max; ++t) {
    const double current = (*this)(t);
    if (!(current >= previous)) return false;
    previous = current;
  }
  return true;
}

Grid1D difference_kernel(unsigned n) {
  if (n + 1 > Grid1D::max_resolution) throw std::invalid_argument("difference_kernel: n too large");
  return subtract(dirichlet_closed_form(n + 1, n + 1), dirichlet_closed_form(n, n + 1));
}

Grid2D counterexample(unsigned n, unsigned cap) {
  if (n > cap) throw ResourceCapError(fmt::format("counterexample: n = {} exceeds the 2D cap {}", n, cap));
  const Grid1D d = difference_kernel(n);
  return tensor(d, d);
}

namespace {

void require_block(unsigned n, std::uint64_t k, const char* what) {
  if (n >= 62) throw std::invalid_argument(std::string(what) + ": n too large");
  const std::uint64_t low = std::uint64_t{1} << n;
  if (k <= low || k > 2 * low) throw std::invalid_argument(std::string(what) + ": k must satisfy 2^n < k <= 2^(n+1)");
}

double weight_denominator(std::uint64_t k, LogBase base) {
  const double l = log_in(base, static_cast<double>(k) + 1.0);
  return static_cast<double>(k) * l * l;
}

}  // namespace

Grid2D closed_form_partial_sum(unsigned n, std::uint64_t k) {
  require_block(n, k, "closed_form_partial_sum");
  const std::uint64_t low = std::uint64_t{1} << n;
  const Grid1D factor = multiply(walsh_function(low, n + 1), dirichlet_recursive(k - low, n + 1));
  return tensor(factor, factor);
}

DyadicRational snn_norm(unsigned n, std::uint64_t k) {
  require_block(n, k, "snn_norm");
  const DyadicRational l = lebesgue_constant(k - (std::uint64_t{1} << n));
  return l * l;
}

std::vector<DivergenceRecord> divergence_sweep(unsigned n_min, unsigned n_max, const WeightFunction& phi, LogBase base,
                                               NormPath path, unsigned cap) {
  if (n_min > n_max) throw std::invalid_argument("divergence_sweep: n_min must not exceed n_max");
  const unsigned limit = path == NormPath::oracle ? std::min(cap, kOracleCap) : cap;
  if (n_max > limit) {
    throw ResourceCapError(fmt::format("divergence_sweep: n_max = {} exceeds the cap {} for the {} path", n_max, limit,
                                       to_string(path)));
  }

  std::optional<LebesgueTable> table;
  if (path == NormPath::shortcut) table.emplace(n_max);

  std::vector<DivergenceRecord> records;
  for (unsigned n = n_min; n <= n_max; ++n) {
    const std::uint64_t low = std::uint64_t{1} << n;
    std::vector<double> terms(low);
    if (path == NormPath::shortcut) {
#pragma omp parallel for schedule(static) if (low > 1024)
      for (std::uint64_t i = 1; i <= low; ++i) {
        const DyadicRational l = (*table)[i];
        const DyadicRational norm = l * l;
        const std::uint64_t k = low + i;
        terms[i - 1] = norm.to_double() * phi(k) / weight_denominator(k, base);
      }
    } else {
      const Spectrum2D spectrum = analyze(counterexample(n, kOracleCap));
      for (std::uint64_t i = 1; i <= low; ++i) {
        const std::uint64_t k = low + i;
        const DyadicRational norm = l1_norm(partial_sum_from(spectrum, k, k));
        terms[i - 1] = norm.to_double() * phi(k) / weight_denominator(k, base);
      }
    }
    double block = 0.0;
    for (const double t : terms) block += t;  // ascending k

    DivergenceRecord r;
    r.n = n;
    r.block_sum = block;
    r.phi_at_block = phi(low);
    r.ratio = block / r.phi_at_block;
    r.exact_norms_used = true;
    r.path = path;
    records.push_back(r);
  }
  return records;
}

double theorem_g_sum(const Grid2D& f, std::uint64_t k_max, LogBase base) {
  if (k_max == 0 || k_max > f.side()) throw std::invalid_argument("theorem_g_sum: need 1 <= k_max <= 2^resolution");
  const Spectrum2D spectrum = analyze(f);
  std::vector<double> terms(k_max);
#pragma omp parallel for schedule(dynamic)
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    const DyadicRational norm = l1_norm(partial_sum_from(spectrum, k, k));
    terms[k - 1] = norm.to_double() / weight_denominator(k, base);
  }
  double total = 0.0;
  for (const double t : terms) total += t;
  return total;
}

double simon_sum_1d(const Grid1D& f, std::uint64_t n, LogBase base) {
  if (n < 2) throw std::invalid_argument("simon_sum_1d: n must be at least 2");
  if (n > f.size()) throw std::invalid_argument("simon_sum_1d: n exceeds 2^resolution");
  const Spectrum1D spectrum = analyze(f);
  detail::require_headroom(spectrum.max_abs_numerator(), f.resolution(), "simon_sum_1d: partial sums would overflow");
  const auto& coeff = spectrum.cells();
  const std::uint64_t denominator_exp = spectrum.exponent() + f.resolution();

  // S_{k+1} f = S_k f + f^(k) w_k, kept as numerators over 2^spectrum.exponent()
  std::vector<std::int64_t> partial(f.size(), 0);
  double total = 0.0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    const std::int64_t c = coeff[k - 1];
    if (c != 0) {
      for (std::size_t j = 0; j < partial.size(); ++j) partial[j] += (std::popcount((k - 1) & j) & 1) ? -c : c;
    }
    const DyadicRational norm(exact_sum(partial, true), denominator_exp);
    total += norm.to_double() / static_cast<double>(k);
  }
  return total / log_in(base, static_cast<double>(n));
}

std::vector<FineCheckpoint> fine_ratios(std::uint64_t n_max, FineVariant variant) {
  if (n_max < 2) throw std::invalid_argument("fine_ratios: n_max must be at least 2");
  const unsigned resolution = ceil_log2(n_max);
  if (resolution > Grid1D::max_resolution) throw std::invalid_argument("fine_ratios: n_max too large");

  std::optional<LebesgueTable> table;
  if (variant == FineVariant::lebesgue) table.emplace(resolution);

  std::vector<FineCheckpoint> out;
  BigInt running = 0;  // over the denominator 2^resolution for the lebesgue variant
  std::uint64_t next_checkpoint = 2;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    running += variant == FineVariant::variation ? BigInt(variation(n)) : BigInt(table->scaled(n));
    if (n == next_checkpoint || n == n_max) {
      FineCheckpoint cp;
      cp.n = n;
      cp.total = DyadicRational(running, variant == FineVariant::variation ? 0 : resolution);
      cp.ratio = cp.total.to_double() / (static_cast<double>(n) * std::log(static_cast<double>(n)));
      out.push_back(std::move(cp));
      if (n == next_checkpoint) next_checkpoint *= 2;
    }
  }
  return out;
}

CauchySchwarzSides cauchy_schwarz_sides(unsigned n) {
  if (n == 0 || n > 40) throw std::invalid_argument("cauchy_schwarz_sides: need 1 <= n <= 40");
  const std::uint64_t count = std::uint64_t{1} << n;
  BigInt sum = 0;
  BigInt sum_sq = 0;
  for (std::uint64_t k = 1; k <= count; ++k) {
    const unsigned v = variation(k);
    sum += v;
    sum_sq += v * v;
  }
  return CauchySchwarzSides{sum * sum, BigInt(count) * sum_sq};
}

bool cauchy_schwarz_check(unsigned n) {
  const auto sides = cauchy_schwarz_sides(n);
  return sides.lhs <= sides.rhs;
}

}  // namespace paley
