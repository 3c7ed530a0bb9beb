#include "noderank/influence.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "noderank/error.hpp"
#include "noderank/metrics.hpp"
#include "noderank/parallel.hpp"

namespace noderank {

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstRowMap = Eigen::Map<const RowMatrix>;
using RowMap = Eigen::Map<RowMatrix>;

}  // namespace

GsmScores gsm_scores(const Graph& g, std::span<const std::uint32_t> shells) {
  const std::size_t n = g.node_count();
  if (n < 2) fail(ErrorCode::DegenerateGraph, "GSM needs at least 2 nodes");
  if (shells.size() != n) {
    fail(ErrorCode::SizeMismatch, std::to_string(shells.size()) + " shell values for " +
                                      std::to_string(n) + " nodes");
  }
  GsmScores s;
  s.self_influence.resize(n);
  s.global_influence.assign(n, 0.0);
  s.gsm.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    s.self_influence[v] = std::exp(static_cast<double>(shells[v]) / static_cast<double>(n));
  }

  const std::size_t blocks = block_count(n);
  parallel_blocks(blocks, [&](std::size_t b) {
    std::vector<std::uint32_t> dist(n, kUnreachable);
    std::vector<NodeId> queue;
    queue.reserve(n);
    const auto range = block_range(n, b);
    for (auto src = static_cast<NodeId>(range.begin); src < range.end; ++src) {
      queue.clear();
      queue.push_back(src);
      dist[src] = 0;
      double sum = 0.0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId v = queue[head];
        if (v != src) sum += static_cast<double>(shells[v]) / static_cast<double>(dist[v]);
        for (NodeId w : g.neighbors(v)) {
          if (dist[w] == kUnreachable) {
            dist[w] = dist[v] + 1;
            queue.push_back(w);
          }
        }
      }
      s.global_influence[src] = sum;
      for (NodeId v : queue) dist[v] = kUnreachable;
    }
  });

  for (NodeId v = 0; v < n; ++v) s.gsm[v] = s.self_influence[v] * s.global_influence[v];
  return s;
}

DenseMatrix dematel_direct(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n < 2) fail(ErrorCode::DegenerateGraph, "DEMATEL needs at least 2 nodes");
  if (n > kDematelMaxNodes) {
    fail(ErrorCode::MatrixTooLarge, std::to_string(n) + " nodes exceed the dense DEMATEL cap of " +
                                        std::to_string(kDematelMaxNodes));
  }
  DenseMatrix a(n, n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : g.neighbors(u)) a(u, v) = 1.0;
  }
  return a;
}

DematelResult dematel_total(const DenseMatrix& direct, double epsilon) {
  const std::size_t n = direct.rows();
  if (direct.cols() != n || n == 0) {
    fail(ErrorCode::InvalidMatrix, "direct-relation matrix must be square and non-empty");
  }
  if (n > kDematelMaxNodes) {
    fail(ErrorCode::MatrixTooLarge, std::to_string(n) + " rows exceed the dense DEMATEL cap of " +
                                        std::to_string(kDematelMaxNodes));
  }
  if (!(epsilon > 0.0)) fail(ErrorCode::InvalidArgument, "epsilon must be positive");

  const ConstRowMap a(direct.data(), static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) != 0.0) fail(ErrorCode::InvalidMatrix, "diagonal entry " + std::to_string(i) + " is nonzero");
  }
  if (!a.allFinite() || (a.array() < 0.0).any()) {
    fail(ErrorCode::InvalidMatrix, "entries must be finite and nonnegative");
  }
  const double max_row = a.rowwise().sum().maxCoeff();
  const double max_col = a.colwise().sum().maxCoeff();
  const double peak = std::max(max_row, max_col);
  if (peak == 0.0) fail(ErrorCode::ZeroMatrix, "direct-relation matrix is all zeros");

  DematelResult r;
  r.scale = (1.0 + epsilon) * peak;
  r.total = DenseMatrix(n, n);
  RowMap t(r.total.data(), static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  {
    // Solve (I - X) T = X; X commutes with (I - X)^-1 so this is X (I - X)^-1.
    RowMatrix m = -a / r.scale;
    m.diagonal().array() += 1.0;
    Eigen::PartialPivLU<Eigen::Ref<RowMatrix>> lu(m);
    t = lu.permutationP() * (a / r.scale);
    lu.matrixLU().triangularView<Eigen::UnitLower>().solveInPlace(t);
    lu.matrixLU().triangularView<Eigen::Upper>().solveInPlace(t);
  }

  // Residual (I - X) T - X = T - X T - X, formed in row blocks.
  constexpr Eigen::Index kChunk = 256;
  double residual = 0.0;
  for (Eigen::Index r0 = 0; r0 < static_cast<Eigen::Index>(n); r0 += kChunk) {
    const Eigen::Index rows = std::min<Eigen::Index>(kChunk, static_cast<Eigen::Index>(n) - r0);
    RowMatrix block = t.middleRows(r0, rows) - a.middleRows(r0, rows) / r.scale;
    block.noalias() -= (a.middleRows(r0, rows) / r.scale) * t;
    residual = std::max(residual, block.cwiseAbs().rowwise().sum().maxCoeff());
  }
  r.residual = residual;
  if (!std::isfinite(residual) || residual > kDematelResidualLimit) {
    fail(ErrorCode::IllConditioned, "solve residual " + std::to_string(residual) +
                                        " exceeds " + std::to_string(kDematelResidualLimit));
  }

  r.dispatch.resize(n);
  r.receive.resize(n);
  r.prominence.resize(n);
  r.relation.resize(n);
  const Eigen::VectorXd rows = t.rowwise().sum();
  const Eigen::RowVectorXd cols = t.colwise().sum();
  for (std::size_t i = 0; i < n; ++i) {
    r.dispatch[i] = rows(static_cast<Eigen::Index>(i));
    r.receive[i] = cols(static_cast<Eigen::Index>(i));
    r.prominence[i] = r.dispatch[i] + r.receive[i];
    r.relation[i] = r.dispatch[i] - r.receive[i];
  }
  return r;
}

std::vector<double> minmax_normalize(std::span<const double> values) {
  std::vector<double> out(values.size(), 0.0);
  if (values.empty()) return out;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double range = *hi - *lo;
  const double magnitude = std::max(std::abs(*hi), std::abs(*lo));
  if (!(range > 1e-12 * magnitude)) return out;
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = (values[i] - *lo) / range;
  return out;
}

FusedRanking fuse_scores(std::span<const double> gsm, std::span<const double> prominence,
                         double alpha) {
  if (gsm.size() != prominence.size()) {
    fail(ErrorCode::SizeMismatch, std::to_string(gsm.size()) + " GSM scores vs " +
                                      std::to_string(prominence.size()) + " DEMATEL scores");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    fail(ErrorCode::InvalidArgument, "alpha must lie in [0, 1]");
  }
  const auto g = minmax_normalize(gsm);
  const auto p = minmax_normalize(prominence);
  FusedRanking f;
  f.alpha = alpha;
  f.fused.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    f.fused[i] = std::clamp(alpha * g[i] + (1.0 - alpha) * p[i], 0.0, 1.0);
  }
  // The boundary weights must rank exactly like their constituent score.
  if (alpha == 1.0) {
    f.order = rank_order(gsm);
  } else if (alpha == 0.0) {
    f.order = rank_order(prominence);
  } else {
    f.order = rank_order(f.fused);
  }
  return f;
}

FusedRanking fused_ranking(const GsmScores& gsm, const DematelResult& dematel, double alpha) {
  return fuse_scores(gsm.gsm, dematel.prominence, alpha);
}

InfluenceScores compute_influence(const Graph& g, const InfluenceOptions& options) {
  InfluenceScores s;
  s.requested_alpha = options.alpha;
  if (!(options.alpha >= 0.0 && options.alpha <= 1.0)) {
    fail(ErrorCode::InvalidArgument, "alpha must lie in [0, 1]");
  }
  s.shells = k_shell(g);
  s.gsm = gsm_scores(g, s.shells);
  double alpha = options.alpha;
  if (g.node_count() > kDematelMaxNodes && options.allow_dematel_skip) {
    s.dematel_skipped = true;
    alpha = 1.0;
  } else {
    const DematelResult d = dematel_total(dematel_direct(g), options.epsilon);
    s.dispatch = d.dispatch;
    s.receive = d.receive;
    s.prominence = d.prominence;
    s.relation = d.relation;
  }
  // Without DEMATEL the prominence term carries zero weight.
  const std::vector<double> zeros(g.node_count(), 0.0);
  s.fused = fuse_scores(s.gsm.gsm, s.dematel_skipped ? std::span<const double>(zeros)
                                                     : std::span<const double>(s.prominence),
                        alpha);
  s.rank.assign(g.node_count(), 0);
  for (std::size_t pos = 0; pos < s.fused.order.size(); ++pos) s.rank[s.fused.order[pos]] = pos + 1;
  return s;
}

MeasureScores rank_by(Measure measure, const Graph& g, const RankOptions& options) {
  MeasureScores m;
  m.measure = measure;
  switch (measure) {
    case Measure::Degree:
      m.scores = degree_centrality(g).values;
      break;
    case Measure::Betweenness:
      m.scores = betweenness_centrality(g).values;
      break;
    case Measure::Closeness:
      m.scores = closeness_centrality(g).values;
      break;
    case Measure::Eigenvector:
      m.scores = eigenvector_centrality_with_retry(g, options.eigenvector).values;
      break;
    case Measure::KShell: {
      const auto shells = k_shell(g);
      m.scores.assign(shells.begin(), shells.end());
      break;
    }
    case Measure::Gsm:
      m.scores = gsm_scores(g, k_shell(g)).gsm;
      break;
    case Measure::Dematel:
      m.scores = dematel_total(dematel_direct(g), options.influence.epsilon).prominence;
      break;
    case Measure::Fused: {
      auto s = compute_influence(g, options.influence);
      m.scores = std::move(s.fused.fused);
      m.order = std::move(s.fused.order);
      return m;
    }
  }
  m.order = rank_order(m.scores);
  return m;
}

}  // namespace noderank
