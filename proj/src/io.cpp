#include "paley/io.hpp"

#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

namespace paley {
namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_text(const TableWriter::Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return csv_escape(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, BigInt>) {
          return v.str();
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

nlohmann::ordered_json json_value(const TableWriter::Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BigInt>) {
          if (v <= BigInt(INT64_MAX) && v >= BigInt(INT64_MIN)) return v.template convert_to<std::int64_t>();
          return v.str();
        } else {
          return v;
        }
      },
      cell);
}

template <class Array>
void write_dyadic_array(std::ostream& out, const Array& array, OutputFormat format, const char* index_column) {
  TableWriter table(out, format, {index_column, "value_numerator", "value_exponent", "value_float"});
  for (std::size_t c = 0; c < array.size(); ++c) {
    const DyadicRational v = array[c];
    table.row({static_cast<std::uint64_t>(c), v.numerator(), v.exponent(), v.to_double()});
  }
}

}  // namespace

std::string format_double(double value) { return fmt::format("{}", value); }

TableWriter::TableWriter(std::ostream& out, OutputFormat format, std::vector<std::string> columns)
    : out_(out), format_(format), columns_(std::move(columns)) {
  if (format_ == OutputFormat::csv) {
    for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << csv_escape(columns_[i]);
    out_ << '\n';
  }
}

void TableWriter::row(const std::vector<Cell>& cells) {
  if (cells.size() != columns_.size()) throw std::invalid_argument("TableWriter: cell count does not match columns");
  if (format_ == OutputFormat::csv) {
    for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << csv_text(cells[i]);
    out_ << '\n';
    return;
  }
  nlohmann::ordered_json object = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < cells.size(); ++i) object[columns_[i]] = json_value(cells[i]);
  out_ << object.dump() << '\n';
}

template <GridType G>
void write_grid(std::ostream& out, const G& grid, OutputFormat format) {
  write_dyadic_array(out, grid, format, "cell_index");
}

template <int Dim>
void write_spectrum(std::ostream& out, const DyadicArray<Dim, CoefficientTag>& spectrum, OutputFormat format) {
  write_dyadic_array(out, spectrum, format, "coeff_index");
}

template void write_grid<Grid1D>(std::ostream&, const Grid1D&, OutputFormat);
template void write_grid<Grid2D>(std::ostream&, const Grid2D&, OutputFormat);
template void write_spectrum<1>(std::ostream&, const Spectrum1D&, OutputFormat);
template void write_spectrum<2>(std::ostream&, const Spectrum2D&, OutputFormat);

}  // namespace paley
