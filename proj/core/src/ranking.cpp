#include "noderank/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace noderank {

std::string_view to_string(Measure m) noexcept {
  switch (m) {
    case Measure::Degree: return "dc";
    case Measure::Betweenness: return "bc";
    case Measure::Closeness: return "cc";
    case Measure::Eigenvector: return "ec";
    case Measure::KShell: return "kshell";
    case Measure::Gsm: return "gsm";
    case Measure::Dematel: return "dematel";
    case Measure::Fused: return "fused";
  }
  return "?";
}

std::optional<Measure> parse_measure(std::string_view text) noexcept {
  for (auto m : {Measure::Degree, Measure::Betweenness, Measure::Closeness, Measure::Eigenvector,
                 Measure::KShell, Measure::Gsm, Measure::Dematel, Measure::Fused}) {
    if (text == to_string(m)) return m;
  }
  return std::nullopt;
}

std::vector<NodeId> rank_order(std::span<const double> scores) {
  double scale = 0.0;
  for (double s : scores) scale = std::max(scale, std::abs(s));
  // Quantize to a grid of 1e-12 * scale; llround keeps the key exact.
  std::vector<long long> key(scores.size(), 0);
  if (scale > 0.0) {
    for (std::size_t i = 0; i < scores.size(); ++i) key[i] = std::llround(scores[i] / scale * 1e12);
  }
  std::vector<NodeId> order(scores.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return key[a] > key[b]; });
  return order;
}

}  // namespace noderank
