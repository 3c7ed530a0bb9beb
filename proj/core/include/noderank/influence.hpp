#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "noderank/centrality.hpp"
#include "noderank/graph.hpp"
#include "noderank/matrix.hpp"
#include "noderank/ranking.hpp"

namespace noderank {

// ---------------------------------------------------------------------------
// Global structure model
// ---------------------------------------------------------------------------

struct GsmScores {
  /// exp(ks(i) / N); at least 1.
  std::vector<double> self_influence;
  /// Sum over reachable j != i of ks(j) / d(i, j).
  std::vector<double> global_influence;
  /// self_influence * global_influence.
  std::vector<double> gsm;
};

/// GSM scores from precomputed k-shell indices. Throws DegenerateGraph for
/// N < 2 and SizeMismatch if `shells` does not have one entry per node.
GsmScores gsm_scores(const Graph& g, std::span<const std::uint32_t> shells);

// ---------------------------------------------------------------------------
// DEMATEL total-relation analysis
// ---------------------------------------------------------------------------

/// Dense storage bound: N above this raises MatrixTooLarge.
inline constexpr std::size_t kDematelMaxNodes = 5000;
inline constexpr double kDematelDefaultEpsilon = 1e-6;
inline constexpr double kDematelResidualLimit = 1e-8;

/// Binary adjacency matrix with zero diagonal.
/// Throws DegenerateGraph for N < 2 and MatrixTooLarge above the cap.
DenseMatrix dematel_direct(const Graph& g);

struct DematelResult {
  /// (1 + epsilon) * max(max row sum, max column sum) of the direct matrix.
  double scale = 0.0;
  /// T = X (I - X)^-1 with X = A / scale.
  DenseMatrix total;
  std::vector<double> dispatch;    ///< row sums of T
  std::vector<double> receive;     ///< column sums of T
  std::vector<double> prominence;  ///< dispatch + receive
  std::vector<double> relation;    ///< dispatch - receive
  /// max-row-sum norm of (I - X) T - X.
  double residual = 0.0;
};

/// Total-relation matrix of a square, nonnegative, zero-diagonal matrix.
/// The (1 + epsilon) inflation keeps the spectral radius of X below 1.
///
/// Errors: InvalidMatrix (shape, sign or diagonal), MatrixTooLarge,
/// ZeroMatrix, IllConditioned when the residual exceeds 1e-8.
DematelResult dematel_total(const DenseMatrix& direct, double epsilon = kDematelDefaultEpsilon);

// ---------------------------------------------------------------------------
// Fusion and ranking
// ---------------------------------------------------------------------------

/// Affine map onto [0, 1]; (near-)constant vectors map to all zeros.
std::vector<double> minmax_normalize(std::span<const double> values);

struct FusedRanking {
  double alpha = 0.5;
  std::vector<double> fused;
  std::vector<NodeId> order;
};

inline constexpr double kDefaultAlpha = 0.5;

/// fused = alpha * minmax(gsm) + (1 - alpha) * minmax(prominence), ranked
/// descending with ascending-index ties. Throws SizeMismatch and
/// InvalidArgument (alpha outside [0, 1]).
FusedRanking fuse_scores(std::span<const double> gsm, std::span<const double> prominence,
                         double alpha = kDefaultAlpha);
FusedRanking fused_ranking(const GsmScores& gsm, const DematelResult& dematel,
                           double alpha = kDefaultAlpha);

/// Everything the influence pipeline produces for one graph.
struct InfluenceScores {
  std::vector<std::uint32_t> shells;
  GsmScores gsm;
  /// Empty when the graph exceeded kDematelMaxNodes.
  std::vector<double> dispatch;
  std::vector<double> receive;
  std::vector<double> prominence;
  std::vector<double> relation;
  bool dematel_skipped = false;
  /// Requested alpha, and the one actually used (1 when DEMATEL is skipped).
  double requested_alpha = kDefaultAlpha;
  FusedRanking fused;
  /// rank[v] is the 1-based position of node v in fused.order.
  std::vector<std::size_t> rank;
};

struct InfluenceOptions {
  double alpha = kDefaultAlpha;
  double epsilon = kDematelDefaultEpsilon;
  /// When false, oversized graphs raise MatrixTooLarge instead of falling
  /// back to alpha = 1.
  bool allow_dematel_skip = true;
};

InfluenceScores compute_influence(const Graph& g, const InfluenceOptions& options = {});

struct RankOptions {
  InfluenceOptions influence;
  EigenvectorOptions eigenvector;
};

struct MeasureScores {
  Measure measure = Measure::Fused;
  std::vector<double> scores;
  std::vector<NodeId> order;
};

/// Scores and full descending ranking for any supported measure.
MeasureScores rank_by(Measure measure, const Graph& g, const RankOptions& options = {});

}  // namespace noderank
