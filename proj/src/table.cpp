#include "qmg/table.hpp"

#include <fstream>
#include <stdexcept>
#include <fmt/format.h>
#include <json.hpp>

#include "qmg/core.hpp"

namespace qmg {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct CsvCell {
  std::string operator()(std::monostate) const { return {}; }
  std::string operator()(double v) const { return format_number(v); }
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(bool v) const { return v ? "true" : "false"; }
  std::string operator()(const std::string& v) const { return csv_field(v); }
};

struct JsonCell {
  nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
  // Round-trip through the 12-digit text so JSON and CSV carry the same value.
  nlohmann::ordered_json operator()(double v) const { return std::stod(format_number(v)); }
  nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
  nlohmann::ordered_json operator()(bool v) const { return v; }
  nlohmann::ordered_json operator()(const std::string& v) const { return v; }
};

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument(fmt::format("row has {} cells for {} columns", row.size(), columns.size()));
  }
  rows.push_back(std::move(row));
}

std::string_view to_string(OutputFormat format) { return format == OutputFormat::Csv ? "csv" : "json"; }

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw DomainError("format", fmt::format("unknown output format '{}' (expected csv or json)", name));
}

std::string format_number(double value) {
  if (value == 0.0) return "0";  // folds -0
  return fmt::format("{:.12g}", value);
}

std::string render_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += csv_field(table.columns[c]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += std::visit(CsvCell{}, row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& table) {
  auto array = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json record = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) record[table.columns[c]] = std::visit(JsonCell{}, row[c]);
    array.push_back(std::move(record));
  }
  return array.dump() + "\n";
}

void emit_table(const Table& table, OutputFormat format, const std::filesystem::path& path) {
  if (table.empty()) throw std::invalid_argument("refusing to write an empty table");
  const std::string text = format == OutputFormat::Csv ? render_csv(table) : render_json(table);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(fmt::format("cannot open '{}' for writing", path.string()));
  out << text;
  if (!out.flush()) throw std::runtime_error(fmt::format("failed writing '{}'", path.string()));
}

}  // namespace qmg
