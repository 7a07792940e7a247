#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace primemodes {

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

enum class Format { Csv, Json, Pretty };

Format parse_format(std::string_view name);

/// 17 significant digits, so every double round-trips exactly.
std::string format_double(double x);

/// CSV: header line then one line per row. JSON: array of objects keyed by
/// column. Pretty: aligned columns for terminals.
std::string emit(const Table& table, Format format);

}  // namespace primemodes
