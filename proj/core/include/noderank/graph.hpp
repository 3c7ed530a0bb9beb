#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace noderank {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Neighbor lists are sorted ascending. Nodes are dense indices
/// [0, node_count()); an optional label per node carries the external id
/// the graph was read from.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `n` nodes. Self-loops and repeated edges (in either
  /// orientation) are discarded. Throws IndexOutOfRange for endpoints >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(NodeId u, NodeId v) const noexcept;

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// External id of `v`, or its decimal index when the graph is unlabeled.
  std::string label(NodeId v) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Canonical edge set: (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  std::vector<std::size_t> degrees() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

struct EdgeListLoad {
  Graph graph;
  std::size_t dropped_self_loops = 0;
  std::size_t dropped_duplicates = 0;
  std::vector<std::string> warnings;
};

/// Parses "u v" lines (whitespace or comma separated, '#' starts a comment).
/// Tokens become dense indices in first-appearance order.
EdgeListLoad load_edge_list(std::istream& in);
EdgeListLoad load_edge_list_file(const std::string& path);

/// Writes the canonical edge list, one "u v" line per edge, preceded by
/// `header` lines emitted as '#' comments.
void write_edge_list(std::ostream& out, const Graph& g,
                     std::span<const std::string> header = {});

struct Subgraph {
  Graph graph;
  /// original[i] is the index in the parent graph of surviving node i.
  std::vector<NodeId> original;
};

/// Induced subgraph on the nodes not listed in `victims`.
Subgraph remove_nodes(const Graph& g, std::span<const NodeId> victims);

inline constexpr NodeId kNoComponent = std::numeric_limits<NodeId>::max();

struct Components {
  /// Component id per node; ids are assigned in order of each component's
  /// smallest node index.
  std::vector<NodeId> id;
  std::vector<std::size_t> sizes;
};

Components connected_components(const Graph& g);

/// Sorted node set of a maximum-cardinality component; ties go to the
/// component containing the smallest index.
std::vector<NodeId> largest_connected_component(const Graph& g);

}  // namespace noderank
