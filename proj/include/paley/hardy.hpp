#pragma once

#include "paley/grid.hpp"

namespace paley {

template <GridType G>
struct HardyReport {
  DyadicRational l1;  // ‖f‖_1
  DyadicRational h1;  // ‖f*‖_1
  G maximal;          // f*
};

/// Dyadic maximal function f* = max_k |S_{2^k} f| (2D: |S_{2^k,2^k} f|).
///
/// For a resolution-N cylinder function the averages are constant in k once
/// k >= N, so the supremum over all k is the maximum over k = 0..N. The result
/// is exact.
Grid1D maximal_function(const Grid1D& f);
Grid2D maximal_function(const Grid2D& f);

HardyReport<Grid1D> h1_norm(const Grid1D& f);
HardyReport<Grid2D> h1_norm(const Grid2D& f);

/// ‖f*‖_p in floating point. Informational only for p != 1.
template <GridType G>
double hp_norm(const G& f, double p) {
  return lp_norm(maximal_function(f), p);
}

}  // namespace paley
