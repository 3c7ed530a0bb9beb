#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "noderank/graph.hpp"

namespace noderank {

enum class GraphModel { ScaleFree, UniformRandom };

std::string_view to_string(GraphModel model) noexcept;

struct GeneratorSpec {
  GraphModel model = GraphModel::ScaleFree;
  std::size_t nodes = 0;
  std::size_t target_edges = 0;
  std::uint64_t seed = 0;
};

/// Synthetic network for `spec`; identical specs give identical edge sets.
///
/// ScaleFree: preferential attachment grown from a small clique. Each new
/// node attaches floor(m) or ceil(m) edges, choosing ceil with probability
/// frac(m), where m is the per-step mean that makes the expected total equal
/// target_edges.
///
/// UniformRandom: exactly target_edges distinct pairs drawn uniformly; the
/// result may be disconnected.
///
/// Throws InfeasibleSpec when the model cannot reach target_edges.
Graph generate(const GeneratorSpec& spec);

}  // namespace noderank
