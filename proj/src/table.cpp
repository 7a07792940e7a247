#include "primemodes/table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "primemodes/errors.hpp"

namespace primemodes {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw DomainError("row has " + std::to_string(row.size()) + " cells, table has " +
                      std::to_string(columns.size()) + " columns");
  }
  rows.push_back(std::move(row));
}

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "pretty") return Format::Pretty;
  throw DomainError("unknown format '" + std::string(name) + "' (csv, json, pretty)");
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  return std::get<std::string>(c);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string json_cell(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) {
    return std::isfinite(*d) ? format_double(*d) : "null";
  }
  return nlohmann::json(std::get<std::string>(c)).dump();
}

}  // namespace

std::string emit(const Table& table, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Csv: {
      for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << csv_field(table.columns[i]);
      }
      out << '\n';
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          out << (i ? "," : "") << csv_field(cell_text(row[i]));
        }
        out << '\n';
      }
      break;
    }
    case Format::Json: {
      out << '[';
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out << (r ? ",\n " : "\n ") << '{';
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
          out << (i ? ", " : "") << nlohmann::json(table.columns[i]).dump() << ": "
              << json_cell(table.rows[r][i]);
        }
        out << '}';
      }
      out << (table.rows.empty() ? "]\n" : "\n]\n");
      break;
    }
    case Format::Pretty: {
      std::vector<std::size_t> width(table.columns.size());
      std::vector<std::vector<std::string>> text;
      for (std::size_t i = 0; i < width.size(); ++i) width[i] = table.columns[i].size();
      for (const auto& row : table.rows) {
        auto& t = text.emplace_back();
        for (std::size_t i = 0; i < row.size(); ++i) {
          t.push_back(cell_text(row[i]));
          width[i] = std::max(width[i], t.back().size());
        }
      }
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          out << (i ? "  " : "") << cells[i] << std::string(width[i] - cells[i].size(), ' ');
        }
        out << '\n';
      };
      line(table.columns);
      std::vector<std::string> rule;
      for (auto w : width) rule.emplace_back(w, '-');
      line(rule);
      for (const auto& t : text) line(t);
      break;
    }
  }
  return out.str();
}

}  // namespace primemodes
