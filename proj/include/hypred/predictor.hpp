#pragma once

#include <optional>
#include <vector>

#include "hypred/zeigen_solver.hpp"

namespace hypred {

/// Guard on C(n, k) when enumerating without a cap.
inline constexpr std::size_t kMaxCandidates = 1'000'000;

struct CandidateSet {
  std::vector<NodeSet> members;  // lexicographic, none equal to an existing edge
  bool truncated = false;        // set when a cap cut the enumeration short
};

/// All k-subsets of nodes that are not edges of h, lexicographic.
/// Throws TooMany when C(n,k) exceeds kMaxCandidates and no cap is given.
CandidateSet enumerate_candidates(const Hypergraph& h, std::optional<std::size_t> cap = std::nullopt);

/// Binomial coefficient saturating at SIZE_MAX.
std::size_t binomial(std::size_t n, std::size_t k);

enum class Aggregation { PerVector, Min, Mean };
std::string_view to_string(Aggregation a) noexcept;
Aggregation parse_aggregation(std::string_view text);

/// Which per-edge cost prices a hypothetical edge.
enum class CandidateCost {
  AmGm,              // w (sum x_i^k - k prod x_i), whatever the Laplacian mode
  DegreeNormalized,  // w (sum x_i^k / d_i - k prod x_i d_i^{-1/k}); existing degrees
};

struct ScoringOptions {
  Aggregation aggregation = Aggregation::PerVector;
  CandidateCost cost = CandidateCost::AmGm;
};

struct CandidateScore {
  NodeSet nodes;
  std::vector<double> costs;  // one per eigenvector
  double aggregate = 0.0;
  std::size_t rank = 0;       // 1-based within its ranking
};

/// One ranking per eigenvector (PerVector) or a single ranking (Min, Mean).
/// Sorted by ascending aggregate, ties lexicographic on nodes.
struct Ranking {
  std::optional<std::size_t> vector_index;
  std::vector<CandidateScore> entries;

  /// 1-based rank of `nodes`, if it is a member.
  std::optional<std::size_t> rank_of(const NodeSet& nodes) const;
};

/// Prices each candidate with unit weight under every eigenvector.
/// Candidate costs never change the degrees used for normalization.
std::vector<Ranking> score_candidates(const Hypergraph& h, const std::vector<NodeSet>& candidates,
                                      const std::vector<Vector>& eigvecs,
                                      const ScoringOptions& opts = {});

struct PreferentialOrder {
  std::size_t rank = 0;                 // best rank across rankings
  std::vector<std::size_t> ranks;       // per ranking
  std::size_t candidate_count = 0;
  double fiedler_value = 0.0;
  std::vector<EigenPair> fiedler_pairs;
  std::vector<Ranking> rankings;
};

/// Removes `held_out`, recomputes the Fiedler set on what remains and ranks
/// every non-edge, the held-out set included. Throws NotAnEdge.
PreferentialOrder preferential_order(const Hypergraph& full, const NodeSet& held_out, LaplacianMode mode,
                                     const SolverConfig& cfg, const ScoringOptions& opts = {});

struct Completion {
  std::vector<NodeSet> candidates;  // full k-sets containing the given nodes
  std::vector<Ranking> rankings;    // over those candidates
  std::vector<EigenPair> fiedler_pairs;

  /// The ranked (k-j)-sets of one ranking, given nodes removed.
  std::vector<NodeSet> completions(std::size_t ranking = 0) const;
  NodeSet given;
};

/// Ranks every way to extend `given` (|given| < k) to a non-edge k-set.
/// Throws InvalidArgument or NoCandidates.
Completion complete_hyperedge(const Hypergraph& h, const NodeSet& given, LaplacianMode mode,
                              const SolverConfig& cfg, const ScoringOptions& opts = {});

/// Candidate generation for completion only (no scoring).
std::vector<NodeSet> completion_candidates(const Hypergraph& h, const NodeSet& given);

}  // namespace hypred
