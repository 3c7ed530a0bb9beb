#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace noderank {

/// One row of a node-influence metadata table. The influence columns are
/// carried as given; they are never used as topology.
struct NodeRecord {
  std::string node_id;
  std::string network_type;
  std::string node_type;
  std::uint64_t connections = 0;
  std::uint64_t k_shell_index = 0;
  double self_influence = 0.0;
  double global_influence = 0.0;

  bool operator==(const NodeRecord&) const = default;
};

inline constexpr std::string_view kGnidHeader =
    "Node ID,Network Type,Node Type,Connections,k-Shell Index,"
    "Self-Influence Score,Global Influence Score";

/// Reads the comma-separated table. Errors: HeaderMismatch, DuplicateNodeId,
/// FieldParse (message names row and column).
std::vector<NodeRecord> load_gnid_table(std::istream& in);
std::vector<NodeRecord> load_gnid_table_file(const std::string& path);

/// Writes header plus one row per record. Reals use the shortest text that
/// parses back to the same value.
void write_gnid_table(std::ostream& out, const std::vector<NodeRecord>& records);

}  // namespace noderank
