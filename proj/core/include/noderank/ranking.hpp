#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "noderank/graph.hpp"

namespace noderank {

enum class Measure { Degree, Betweenness, Closeness, Eigenvector, KShell, Gsm, Dematel, Fused };

std::string_view to_string(Measure m) noexcept;
/// Accepts the CLI spellings: dc, bc, cc, ec, kshell, gsm, dematel, fused.
std::optional<Measure> parse_measure(std::string_view text) noexcept;

/// Node indices sorted by score descending, ties by ascending index.
/// Scores within 1e-12 of the largest magnitude of each other are treated as
/// equal, so floating-point noise on symmetric nodes does not reorder them.
std::vector<NodeId> rank_order(std::span<const double> scores);

}  // namespace noderank
