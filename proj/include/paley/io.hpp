#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "paley/grid.hpp"

namespace paley {

enum class OutputFormat { csv, json };

/// Shortest round-trip decimal form, '.' as separator.
std::string format_double(double value);

/// Row-oriented emitter: CSV with a mandatory header row (RFC 4180 quoting),
/// or newline-delimited JSON with one object per row and keys in column order.
class TableWriter {
 public:
  using Cell = std::variant<std::string, std::int64_t, std::uint64_t, double, bool, BigInt>;

  TableWriter(std::ostream& out, OutputFormat format, std::vector<std::string> columns);

  /// Throws std::invalid_argument if the cell count differs from the column count.
  void row(const std::vector<Cell>& cells);

 private:
  std::ostream& out_;
  OutputFormat format_;
  std::vector<std::string> columns_;
};

/// Columns: cell_index,value_numerator,value_exponent,value_float.
/// 2D grids are emitted row-major by the first coordinate.
template <GridType G>
void write_grid(std::ostream& out, const G& grid, OutputFormat format = OutputFormat::csv);

/// Columns: coeff_index,value_numerator,value_exponent,value_float.
template <int Dim>
void write_spectrum(std::ostream& out, const DyadicArray<Dim, CoefficientTag>& spectrum,
                    OutputFormat format = OutputFormat::csv);

}  // namespace paley
