// Flat result tables and their CSV / JSON renderings.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qmg {

/// monostate renders as an empty CSV field and JSON null.
using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
  bool empty() const { return rows.empty(); }
};

enum class OutputFormat { Csv, Json };

std::string_view to_string(OutputFormat format);
OutputFormat parse_output_format(std::string_view name);

/// Doubles use 12 significant digits.
std::string format_number(double value);

/// Header row, LF line endings, RFC 4180 quoting for strings that need it.
std::string render_csv(const Table& table);

/// Array of flat objects keyed by column name, one per row.
std::string render_json(const Table& table);

/// Throws std::invalid_argument on an empty table (nothing is written) and
/// std::runtime_error when the path cannot be written.
void emit_table(const Table& table, OutputFormat format, const std::filesystem::path& path);

}  // namespace qmg
