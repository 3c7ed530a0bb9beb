#include "noderank/gnid.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "noderank/error.hpp"
#include "noderank/format.hpp"

namespace noderank {

namespace {

constexpr std::size_t kColumns = 7;
constexpr std::array<std::string_view, kColumns> kColumnNames = {
    "Node ID",      "Network Type",         "Node Type",
    "Connections",  "k-Shell Index",        "Self-Influence Score",
    "Global Influence Score"};

// Splits one CSV record with RFC 4180 quoting. Embedded newlines inside
// quotes are not supported; rows are single lines.
bool split_csv(std::string_view line, std::vector<std::string>& fields) {
  fields.clear();
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  if (quoted) return false;
  fields.push_back(std::move(field));
  return true;
}

template <typename T>
T parse_number(const std::string& text, std::size_t row, std::size_t column) {
  T value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    fail(ErrorCode::FieldParse, "row " + std::to_string(row) + ", column '" +
                                    std::string(kColumnNames[column]) + "': cannot parse '" +
                                    text + "'");
  }
  if constexpr (std::is_floating_point_v<T>) {
    if (!(value >= 0.0) || !std::isfinite(value)) {
      fail(ErrorCode::FieldParse, "row " + std::to_string(row) + ", column '" +
                                      std::string(kColumnNames[column]) +
                                      "': expected a finite non-negative value, got '" + text + "'");
    }
  }
  return value;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

std::vector<NodeRecord> load_gnid_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) fail(ErrorCode::HeaderMismatch, "missing header row");
  strip_cr(line);
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
  if (line != kGnidHeader) {
    fail(ErrorCode::HeaderMismatch, "expected '" + std::string(kGnidHeader) + "', found '" + line + "'");
  }

  std::vector<NodeRecord> records;
  std::unordered_set<std::string> ids;
  std::vector<std::string> fields;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    strip_cr(line);
    if (line.empty()) continue;
    ++row;
    if (!split_csv(line, fields) || fields.size() != kColumns) {
      fail(ErrorCode::FieldParse, "row " + std::to_string(row) + ": expected " +
                                      std::to_string(kColumns) + " fields, found " +
                                      std::to_string(fields.size()));
    }
    NodeRecord r;
    r.node_id = fields[0];
    r.network_type = fields[1];
    r.node_type = fields[2];
    r.connections = parse_number<std::uint64_t>(fields[3], row, 3);
    r.k_shell_index = parse_number<std::uint64_t>(fields[4], row, 4);
    r.self_influence = parse_number<double>(fields[5], row, 5);
    r.global_influence = parse_number<double>(fields[6], row, 6);
    if (!ids.insert(r.node_id).second) {
      fail(ErrorCode::DuplicateNodeId, "row " + std::to_string(row) + ": '" + r.node_id + "'");
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<NodeRecord> load_gnid_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
  return load_gnid_table(in);
}

void write_gnid_table(std::ostream& out, const std::vector<NodeRecord>& records) {
  out << kGnidHeader << '\n';
  for (const auto& r : records) {
    out << csv_field(r.node_id) << ',' << csv_field(r.network_type) << ','
        << csv_field(r.node_type) << ',' << r.connections << ',' << r.k_shell_index << ','
        << format_real(r.self_influence) << ',' << format_real(r.global_influence) << '\n';
  }
}

}  // namespace noderank
