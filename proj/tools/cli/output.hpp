#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace penney::cli {

using Json = nlohmann::ordered_json;

enum class Format { Text, Csv, Json, Markdown };

Format parse_format(std::string_view name);

struct OutputSpec {
  Format format = Format::Text;
  int decimals = 8;
  std::string destination;  // empty means the command's output stream
};

/// Rows of strings under a header. Every row has the header's width.
class Table {
 public:
  explicit Table(std::vector<std::string> header);

  void add_row(std::vector<std::string> row);
  const std::vector<std::string>& header() const noexcept { return header_; }
  const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }

  std::string csv() const;
  std::string markdown() const;
  /// Array of objects keyed by header, in header order.
  Json json() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string csv_field(std::string_view field);

/// Tables print as markdown in text mode.
void emit(std::ostream& out, const Table& table, Format format);
void emit(std::ostream& out, const Json& doc);

}  // namespace penney::cli
