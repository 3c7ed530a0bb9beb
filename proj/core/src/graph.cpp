#include "noderank/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include "noderank/error.hpp"

namespace noderank {

namespace {

std::uint64_t edge_key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  auto is_sep = [](char c) {
    return c == ' ' || c == '\t' || c == ',' || c == '\r' || c == '\v' || c == '\f';
  };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_sep(line[j])) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n) {
    fail(ErrorCode::SizeMismatch, "label count " + std::to_string(labels.size()) +
                                      " does not match node count " + std::to_string(n));
  }
  if (n > std::numeric_limits<NodeId>::max()) {
    fail(ErrorCode::IndexOutOfRange, "node count exceeds 32-bit index range");
  }
  std::vector<std::size_t> degree(n, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      fail(ErrorCode::IndexOutOfRange, "edge (" + std::to_string(u) + ", " +
                                           std::to_string(v) + ") on " +
                                           std::to_string(n) + " nodes");
    }
    if (u == v) continue;
    ++degree[u];
    ++degree[v];
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + degree[i];
  g.targets_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    g.targets_[cursor[u]++] = v;
    g.targets_[cursor[v]++] = u;
  }

  // Sort and deduplicate each neighbor list in place, then compact.
  std::size_t write = 0;
  std::vector<std::size_t> new_offsets(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]);
    auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    new_offsets[i] = write;
    for (auto it = first; it != last; ++it) g.targets_[write++] = *it;
  }
  new_offsets[n] = write;
  g.targets_.resize(write);
  g.targets_.shrink_to_fit();
  g.offsets_ = std::move(new_offsets);
  g.edge_count_ = write / 2;
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
  if (u >= node_count() || v >= node_count()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::string Graph::label(NodeId v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(node_count());
  for (NodeId v = 0; v < d.size(); ++v) d[v] = degree(v);
  return d;
}

EdgeListLoad load_edge_list(std::istream& in) {
  std::unordered_map<std::string, NodeId> index;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  EdgeListLoad result;

  auto intern = [&](std::string_view token) {
    auto [it, inserted] = index.try_emplace(std::string(token), static_cast<NodeId>(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    auto tokens = split_tokens(view);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      fail(ErrorCode::MalformedLine, "line " + std::to_string(line_no) + ": expected 2 tokens, found " +
                                         std::to_string(tokens.size()));
    }
    NodeId u = intern(tokens[0]);
    NodeId v = intern(tokens[1]);
    if (u == v) {
      ++result.dropped_self_loops;
      result.warnings.push_back("line " + std::to_string(line_no) + ": dropped self-loop on '" +
                                std::string(tokens[0]) + "'");
      continue;
    }
    if (!seen.insert(edge_key(u, v)).second) {
      ++result.dropped_duplicates;
      result.warnings.push_back("line " + std::to_string(line_no) + ": dropped duplicate edge '" +
                                std::string(tokens[0]) + " " + std::string(tokens[1]) + "'");
      continue;
    }
    edges.emplace_back(u, v);
  }
  if (edges.empty()) fail(ErrorCode::EmptyInput, "edge list contains no edges");
  const std::size_t n = labels.size();
  result.graph = Graph::from_edges(n, edges, std::move(labels));
  return result;
}

EdgeListLoad load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, std::span<const std::string> header) {
  for (const auto& line : header) out << "# " << line << '\n';
  for (const auto& [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

Subgraph remove_nodes(const Graph& g, std::span<const NodeId> victims) {
  const std::size_t n = g.node_count();
  std::vector<bool> removed(n, false);
  for (NodeId v : victims) {
    if (v >= n) {
      fail(ErrorCode::IndexOutOfRange, "node " + std::to_string(v) + " not in graph of " +
                                           std::to_string(n) + " nodes");
    }
    removed[v] = true;
  }
  Subgraph sub;
  std::vector<NodeId> remap(n, kNoComponent);
  for (NodeId v = 0; v < n; ++v) {
    if (!removed[v]) {
      remap[v] = static_cast<NodeId>(sub.original.size());
      sub.original.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (!removed[u] && !removed[v]) edges.emplace_back(remap[u], remap[v]);
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(sub.original.size());
    for (NodeId v : sub.original) labels.push_back(g.labels()[v]);
  }
  sub.graph = Graph::from_edges(sub.original.size(), edges, std::move(labels));
  return sub;
}

Components connected_components(const Graph& g) {
  const std::size_t n = g.node_count();
  Components c;
  c.id.assign(n, kNoComponent);
  std::vector<NodeId> queue;
  queue.reserve(n);
  for (NodeId s = 0; s < n; ++s) {
    if (c.id[s] != kNoComponent) continue;
    const auto comp = static_cast<NodeId>(c.sizes.size());
    queue.clear();
    queue.push_back(s);
    c.id[s] = comp;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (NodeId w : g.neighbors(queue[head])) {
        if (c.id[w] == kNoComponent) {
          c.id[w] = comp;
          queue.push_back(w);
        }
      }
    }
    c.sizes.push_back(queue.size());
  }
  return c;
}

std::vector<NodeId> largest_connected_component(const Graph& g) {
  if (g.node_count() == 0) return {};
  const auto c = connected_components(g);
  // max_element returns the first maximum, i.e. the lowest component id.
  const auto best = static_cast<NodeId>(
      std::max_element(c.sizes.begin(), c.sizes.end()) - c.sizes.begin());
  std::vector<NodeId> nodes;
  nodes.reserve(c.sizes[best]);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (c.id[v] == best) nodes.push_back(v);
  }
  return nodes;
}

}  // namespace noderank
