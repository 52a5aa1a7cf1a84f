#pragma once

#include <cstdint>
#include <vector>

#include "paley/grid.hpp"

namespace paley {

/// D_{2^m} from its closed form: 2^m on I_m (cells j with j % 2^m == 0), 0 elsewhere.
/// Requires m <= resolution.
Grid1D dirichlet_closed_form(unsigned m, unsigned resolution);

/// D_n = sum_{k<n} w_k, evaluated as the synthesis of the 0/1 spectrum
/// supported on [0, n). Requires n <= 2^resolution; D_0 is the zero grid.
Grid1D dirichlet_direct(std::uint64_t n, unsigned resolution);

/// D_n built by peeling binary digits with D_{m+2^l} = D_{2^l} + w_{2^l} D_m
/// (m < 2^l), starting from the closed form of D_{2^l}.
Grid1D dirichlet_recursive(std::uint64_t n, unsigned resolution);

/// ‖D_n‖_1, computed on the grid at resolution ceil(log2 n). Requires n >= 1.
DyadicRational lebesgue_constant(std::uint64_t n);

struct LebesgueRecord {
  std::uint64_t n = 0;
  unsigned variation = 0;
  DyadicRational constant;
  double constant_float = 0.0;
  bool lower_ok = false;  // V(n) / 8 <= ‖D_n‖_1
  bool upper_ok = false;  // ‖D_n‖_1 <= V(n)
};

struct LebesgueSweep {
  std::vector<LebesgueRecord> records;        // records[n-1] is for n
  std::vector<DyadicRational> prefix_sums;    // prefix_sums[n-1] = sum_{k<=n} ‖D_k‖_1
};

/// Grid-based Lebesgue constants and bound flags for n = 1..n_max, ordered by n.
LebesgueSweep lebesgue_sweep(std::uint64_t n_max);

/// All Lebesgue constants ‖D_n‖_1 for n <= 2^resolution over the common
/// denominator 2^resolution, from the norm recursion
///   ‖D_{2^l + m}‖_1 = ‖D_m‖_1 + 1 - m 2^-l   (0 <= m < 2^l).
/// Cost is O(1) per entry; used by sweeps far beyond grid range.
class LebesgueTable {
 public:
  explicit LebesgueTable(unsigned resolution);

  unsigned resolution() const { return resolution_; }
  std::uint64_t max_n() const { return scaled_.size() - 1; }
  /// ‖D_n‖_1 * 2^resolution.
  std::int64_t scaled(std::uint64_t n) const { return scaled_.at(n); }
  DyadicRational operator[](std::uint64_t n) const;

 private:
  unsigned resolution_;
  std::vector<std::int64_t> scaled_;
};

}  // namespace paley
