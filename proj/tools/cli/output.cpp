#include "cli/output.hpp"

#include <algorithm>
#include <sstream>

#include "penney/error.hpp"

namespace penney::cli {

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "md" || name == "markdown") return Format::Markdown;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

Table::Table(std::vector<std::string> header) : header_(std::move(header)) {}

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != header_.size()) throw Error(ErrorCode::InvalidArgument, "table row width differs from header");
  rows_.push_back(std::move(row));
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string quoted = "\"";
  for (char ch : field) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

std::string Table::csv() const {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
    out << "\r\n";
  };
  line(header_);
  for (const auto& row : rows_) line(row);
  return out.str();
}

std::string Table::markdown() const {
  std::vector<std::size_t> width(header_.size(), 3);
  for (std::size_t i = 0; i < header_.size(); ++i) width[i] = std::max(width[i], header_[i].size());
  for (const auto& row : rows_)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    out << '|';
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::string cell = cells[i];
      for (std::size_t at = cell.find('|'); at != std::string::npos; at = cell.find('|', at + 2)) cell.insert(at, "\\");
      out << ' ' << cell << std::string(width[i] > cell.size() ? width[i] - cell.size() : 0, ' ') << " |";
    }
    out << '\n';
  };
  line(header_);
  out << '|';
  for (auto w : width) out << ' ' << std::string(w, '-') << " |";
  out << '\n';
  for (const auto& row : rows_) line(row);
  return out.str();
}

Json Table::json() const {
  Json doc = Json::array();
  for (const auto& row : rows_) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < header_.size(); ++i) obj[header_[i]] = row[i];
    doc.push_back(std::move(obj));
  }
  return doc;
}

void emit(std::ostream& out, const Table& table, Format format) {
  switch (format) {
    case Format::Csv: out << table.csv(); break;
    case Format::Json: emit(out, table.json()); break;
    case Format::Text:
    case Format::Markdown: out << table.markdown(); break;
  }
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

}  // namespace penney::cli
