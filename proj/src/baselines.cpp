#include "hypred/baselines.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

namespace hypred::baselines {
namespace {

Matrix dense(const ReducedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_nodes());
  Matrix a = Matrix::Zero(n, n);
  for (NodeId i = 0; i < g.num_nodes(); ++i)
    for (const auto& nb : g.neighbors(i)) a(i, nb.node) = nb.weight;
  return a;
}

template <class PairFn>
void for_each_pair(const NodeSet& c, PairFn&& fn) {
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = a + 1; b < c.size(); ++b) fn(c[a], c[b]);
}

}  // namespace

double cn_score(const ReducedGraph& g, const NodeSet& candidate) {
  double total = 0.0;
  for_each_pair(candidate, [&](NodeId u, NodeId v) {
    auto nu = g.neighbors(u), nv = g.neighbors(v);
    std::size_t i = 0, j = 0, common = 0;
    while (i < nu.size() && j < nv.size()) {
      if (nu[i].node < nv[j].node) {
        ++i;
      } else if (nv[j].node < nu[i].node) {
        ++j;
      } else {
        ++common;
        ++i;
        ++j;
      }
    }
    total += static_cast<double>(common);
  });
  return total;
}

double spectral_radius(const ReducedGraph& g) {
  if (g.num_nodes() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(dense(g), Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

KatzIndex::KatzIndex(const ReducedGraph& g, double beta) : beta_(beta) {
  const double rho = spectral_radius(g);
  if (!(beta > 0.0) || (rho > 0.0 && beta * rho >= 1.0 - 1e-12))
    throw Error(ErrorCode::BetaTooLarge, "beta must lie in (0, 1/rho) with rho = " + std::to_string(rho));
  const Matrix a = dense(g);
  const auto n = a.rows();
  k_ = (Matrix::Identity(n, n) - beta * a).partialPivLu().solve(beta * a);
}

double KatzIndex::score(const NodeSet& candidate) const {
  double total = 0.0;
  for_each_pair(candidate, [&](NodeId u, NodeId v) { total += k_(u, v); });
  return total;
}

double default_katz_beta(const ReducedGraph& g) {
  const double rho = spectral_radius(g);
  double beta = 0.05;
  if (rho > 0.0)
    while (beta >= 0.9 / rho) beta *= 0.5;
  return beta;
}

std::vector<BaselineScore> katz_scores(const ReducedGraph& g, double beta,
                                       const std::vector<NodeSet>& candidates) {
  const KatzIndex katz(g, beta);
  std::vector<BaselineScore> out;
  for (const auto& c : candidates) out.push_back({c, "katz", katz.score(c)});
  return out;
}

ReducedGraph degree_preserving_reduction(const Hypergraph& h) {
  ReducedGraph g(h.num_nodes());
  const double share = 1.0 / static_cast<double>(h.order() - 1);
  for (std::size_t e = 0; e < h.num_edges(); ++e)
    for_each_pair(h.edge(e), [&](NodeId u, NodeId v) { g.add(u, v, h.weight(e) * share); });
  g.finalize();
  return g;
}

ResourceAllocation::ResourceAllocation(const Hypergraph& h)
    : g_(degree_preserving_reduction(h)), degree_(degrees(h)) {}

double ResourceAllocation::pair(NodeId u, NodeId v) const {
  auto nu = g_.neighbors(u), nv = g_.neighbors(v);
  std::size_t i = 0, j = 0;
  double ra = 0.0;
  while (i < nu.size() && j < nv.size()) {
    if (nu[i].node < nv[j].node) {
      ++i;
    } else if (nv[j].node < nu[i].node) {
      ++j;
    } else {
      ra += 1.0 / degree_[nu[i].node];
      ++i;
      ++j;
    }
  }
  return ra;
}

double ResourceAllocation::score(const NodeSet& candidate) const {
  double total = 0.0;
  std::size_t pairs = 0;
  for_each_pair(candidate, [&](NodeId u, NodeId v) {
    total += pair(u, v);
    ++pairs;
  });
  return pairs ? total / static_cast<double>(pairs) : 0.0;
}

double hpra_score(const Hypergraph& h, const NodeSet& candidate) {
  return ResourceAllocation(h).score(candidate);
}

}  // namespace hypred::baselines
