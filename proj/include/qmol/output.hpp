#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace qmol {

/// Fixed 6-significant-digit rendering used for every numeric payload value.
std::string format_number(double x);

/// Quantize x to the value that format_number prints, so that CSV cells and
/// JSON numbers carry identical values.
double quantize(double x);

/// Machine-readable result envelope.  results holds a "columns"/"rows"
/// table (plus optional notes); the CSV rendering is a projection of that
/// table, the JSON rendering is the whole document.
struct OutputDocument {
  std::string schema_version = "1";
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::vector<std::string> assumptions;

  nlohmann::json to_json() const;
  std::string to_json_string() const;  // pretty, trailing newline
  std::string to_csv() const;          // header + rows, LF line endings
};

/// Helper for building the results table with quantized numbers.
class TableBuilder {
 public:
  explicit TableBuilder(std::vector<std::string> columns);

  TableBuilder& begin_row();
  TableBuilder& add(double value);
  TableBuilder& add(int value);
  TableBuilder& add(const std::string& value);
  TableBuilder& add_null();

  nlohmann::json json() const;  // {"columns": [...], "rows": [[...], ...]}

 private:
  std::vector<std::string> columns_;
  nlohmann::json rows_ = nlohmann::json::array();
};

}  // namespace qmol
