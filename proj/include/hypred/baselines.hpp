#pragma once

#include <string>
#include <vector>

#include "hypred/hypergraph.hpp"
#include "hypred/laplacian.hpp"

namespace hypred::baselines {

struct BaselineScore {
  NodeSet nodes;
  std::string method;
  double score = 0.0;  // higher = more likely
};

/// Sum over node pairs of the candidate of |N(u) ∩ N(v)|, N from nonzero A_r.
double cn_score(const ReducedGraph& g, const NodeSet& candidate);

/// Largest eigenvalue magnitude of A_r.
double spectral_radius(const ReducedGraph& g);

/// Pairwise Katz matrix K = sum_{l>=1} beta^l A^l, solved from (I - beta A) K = beta A.
class KatzIndex {
 public:
  /// Throws BetaTooLarge unless 0 < beta < 1/rho(A).
  KatzIndex(const ReducedGraph& g, double beta);

  double pair(NodeId u, NodeId v) const { return k_(u, v); }
  /// Sum of K(u,v) over node pairs of the candidate.
  double score(const NodeSet& candidate) const;
  double beta() const noexcept { return beta_; }
  const Matrix& matrix() const noexcept { return k_; }

 private:
  double beta_;
  Matrix k_;
};

/// 0.05 if admissible, otherwise halved until below 0.9 / rho.
double default_katz_beta(const ReducedGraph& g);

std::vector<BaselineScore> katz_scores(const ReducedGraph& g, double beta,
                                       const std::vector<NodeSet>& candidates);

/// Clique expansion rescaled so node i's row sums to its hypergraph degree:
/// every pair inside an edge e receives w_e / (k - 1).
ReducedGraph degree_preserving_reduction(const Hypergraph& h);

/// Resource-allocation index on the degree-preserving reduction.
class ResourceAllocation {
 public:
  explicit ResourceAllocation(const Hypergraph& h);

  double pair(NodeId u, NodeId v) const;
  /// Mean over node pairs of the candidate.
  double score(const NodeSet& candidate) const;

 private:
  ReducedGraph g_;
  std::vector<double> degree_;
};

double hpra_score(const Hypergraph& h, const NodeSet& candidate);

}  // namespace hypred::baselines
