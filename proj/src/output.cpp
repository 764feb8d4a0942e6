#include "qmol/output.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace qmol {

namespace {

// RFC-4180 quoting, applied only when the cell needs it
std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

double quantize(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_number(x).c_str(), nullptr);
}

nlohmann::json OutputDocument::to_json() const {
  nlohmann::json doc;
  doc["schema_version"] = schema_version;
  doc["command"] = command;
  doc["inputs"] = inputs;
  doc["results"] = results;
  doc["assumptions"] = assumptions;
  return doc;
}

std::string OutputDocument::to_json_string() const {
  return to_json().dump(2) + "\n";
}

std::string OutputDocument::to_csv() const {
  if (!results.contains("columns") || !results.contains("rows"))
    throw std::logic_error("document has no tabular results");
  std::string out;
  const auto& columns = results["columns"];
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += columns[i].get<std::string>();
  }
  out += '\n';
  for (const auto& row : results["rows"]) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      const auto& cell = row[i];
      if (cell.is_null())
        ;  // empty cell
      else if (cell.is_string())
        out += csv_escape(cell.get<std::string>());
      else if (cell.is_number_integer())
        out += std::to_string(cell.get<long long>());
      else
        out += format_number(cell.get<double>());
    }
    out += '\n';
  }
  return out;
}

TableBuilder::TableBuilder(std::vector<std::string> columns)
    : columns_(std::move(columns)) {}

TableBuilder& TableBuilder::begin_row() {
  rows_.push_back(nlohmann::json::array());
  return *this;
}

TableBuilder& TableBuilder::add(double value) {
  rows_.back().push_back(quantize(value));
  return *this;
}

TableBuilder& TableBuilder::add(int value) {
  rows_.back().push_back(value);
  return *this;
}

TableBuilder& TableBuilder::add(const std::string& value) {
  rows_.back().push_back(value);
  return *this;
}

TableBuilder& TableBuilder::add_null() {
  rows_.back().push_back(nullptr);
  return *this;
}

nlohmann::json TableBuilder::json() const {
  nlohmann::json t;
  t["columns"] = columns_;
  t["rows"] = rows_;
  return t;
}

}  // namespace qmol
