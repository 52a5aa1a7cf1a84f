#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "paley/grid.hpp"

namespace paley {

enum class LogBase { natural, two };

double log_in(LogBase base, double x);
std::string to_string(LogBase base);

/// Nondecreasing weight Φ: positive integers -> [1, ∞).
///
/// Presets: one (Φ = 1), log (max(1, ln t)), loglog (max(1, ln ln(t + 16))),
/// power ((1 + t)^alpha, alpha >= 0).
class WeightFunction {
 public:
  enum class Kind { one, log, loglog, power };

  static WeightFunction one() { return WeightFunction(Kind::one, 0.0); }
  static WeightFunction log() { return WeightFunction(Kind::log, 0.0); }
  static WeightFunction loglog() { return WeightFunction(Kind::loglog, 0.0); }
  static WeightFunction power(double alpha);

  Kind kind() const { return kind_; }
  double parameter() const { return alpha_; }
  std::string name() const;

  double operator()(std::uint64_t t) const;

  /// True for every preset except `one` (and power with alpha = 0).
  bool unbounded() const;

  /// Samples Φ(t) >= 1 and Φ(t) <= Φ(t + 1) for 1 <= t <= t_max.
  bool validate(std::uint64_t t_max) const;

 private:
  WeightFunction(Kind kind, double alpha) : kind_(kind), alpha_(alpha) {}

  Kind kind_;
  double alpha_;
};

/// D_{2^{n+1}} - D_{2^n} at resolution n + 1.
Grid1D difference_kernel(unsigned n);

/// f_{n,n} = (D_{2^{n+1}} - D_{2^n}) ⊗ (D_{2^{n+1}} - D_{2^n}) at resolution n + 1.
/// Throws ResourceCapError when n > cap.
Grid2D counterexample(unsigned n, unsigned cap = 12);

/// S_{k,k} f_{n,n} = (w_{2^n} D_{k-2^n}) ⊗ (w_{2^n} D_{k-2^n}) for 2^n < k <= 2^{n+1}.
Grid2D closed_form_partial_sum(unsigned n, std::uint64_t k);

/// ‖S_{k,k} f_{n,n}‖_1 = ‖D_{k-2^n}‖_1^2 for 2^n < k <= 2^{n+1}, exact.
DyadicRational snn_norm(unsigned n, std::uint64_t k);

enum class NormPath {
  shortcut,  // squared 1D Lebesgue constants
  oracle,    // full 2D partial sums of f_{n,n}
};

std::string to_string(NormPath path);

struct DivergenceRecord {
  unsigned n = 0;
  double block_sum = 0.0;     // sum over 2^n < k <= 2^{n+1} of ‖S_{k,k} f_{n,n}‖_1 Φ(k) / (k log^2(k+1))
  double phi_at_block = 0.0;  // Φ(2^n)
  double ratio = 0.0;         // block_sum / Φ(2^n)
  bool exact_norms_used = true;
  NormPath path = NormPath::shortcut;
};

inline constexpr unsigned kDivergenceCap = 14;
inline constexpr unsigned kOracleCap = 8;

/// Weighted strong-convergence sums of f_{n,n} for n_min <= n <= n_max. The
/// terms with k <= 2^n vanish, so each record is the full series for f_{n,n}.
/// Throws ResourceCapError above `cap` (shortcut) or kOracleCap (oracle).
std::vector<DivergenceRecord> divergence_sweep(unsigned n_min, unsigned n_max, const WeightFunction& phi,
                                               LogBase base, NormPath path = NormPath::shortcut,
                                               unsigned cap = kDivergenceCap);

/// sum_{k=1}^{k_max} ‖S_{k,k} f‖_1 / (k log^2(k+1)). Requires k_max <= 2^N.
double theorem_g_sum(const Grid2D& f, std::uint64_t k_max, LogBase base);

/// (1 / log n) sum_{k=1}^{n} ‖S_k f‖_1 / k. Requires 2 <= n <= 2^N.
double simon_sum_1d(const Grid1D& f, std::uint64_t n, LogBase base);

enum class FineVariant { variation, lebesgue };

struct FineCheckpoint {
  std::uint64_t n = 0;
  DyadicRational total;  // sum_{k<=n} X(k)
  double ratio = 0.0;    // total / (n ln n)
};

/// Checkpoints at n = 2, 4, 8, ... and n_max. Requires n_max >= 2.
std::vector<FineCheckpoint> fine_ratios(std::uint64_t n_max, FineVariant variant);

struct CauchySchwarzSides {
  BigInt lhs;  // (sum_{k<=2^n} V(k))^2
  BigInt rhs;  // 2^n sum_{k<=2^n} V(k)^2
};

CauchySchwarzSides cauchy_schwarz_sides(unsigned n);
bool cauchy_schwarz_check(unsigned n);

}  // namespace paley
