#include "hypred/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hypred {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonUniform: return "NonUniform";
    case ErrorCode::RepeatedNode: return "RepeatedNode";
    case ErrorCode::BadWeight: return "BadWeight";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroDegree: return "ZeroDegree";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TooMany: return "TooMany";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NoPositiveEigenpair: return "NoPositiveEigenpair";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::NoCandidates: return "NoCandidates";
    case ErrorCode::BetaTooLarge: return "BetaTooLarge";
    case ErrorCode::TooFewEdges: return "TooFewEdges";
    case ErrorCode::SamplingExhausted: return "SamplingExhausted";
    case ErrorCode::Config: return "Config";
  }
  return "Unknown";
}

Hypergraph::Hypergraph(std::size_t n, std::size_t k, std::vector<NodeSet> edges,
                       std::vector<double> weights)
    : n_(n), k_(k), edges_(std::move(edges)), weights_(std::move(weights)) {
  if (k_ < 2) throw Error(ErrorCode::InvalidArgument, "edge cardinality k must be >= 2");
  if (weights_.empty()) weights_.assign(edges_.size(), 1.0);
  if (weights_.size() != edges_.size())
    throw Error(ErrorCode::InvalidArgument, "weight count differs from edge count");
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto& nodes = edges_[e];
    if (nodes.size() != k_)
      throw Error(ErrorCode::NonUniform, "edge " + std::to_string(e) + " has " +
                                             std::to_string(nodes.size()) + " nodes, expected " +
                                             std::to_string(k_));
    std::sort(nodes.begin(), nodes.end());
    if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
      throw Error(ErrorCode::RepeatedNode, "edge " + std::to_string(e) + " repeats a node");
    if (nodes.back() >= n_)
      throw Error(ErrorCode::InvalidArgument, "edge " + std::to_string(e) + " references node " +
                                                  std::to_string(nodes.back()) + " >= n");
    if (!(weights_[e] > 0.0))
      throw Error(ErrorCode::BadWeight, "edge " + std::to_string(e) + " has nonpositive weight");
  }
  std::vector<NodeSet> sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::InvalidArgument, "duplicate edge");
}

std::optional<std::size_t> Hypergraph::find_edge(const NodeSet& nodes) const {
  auto it = std::find(edges_.begin(), edges_.end(), nodes);
  if (it == edges_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<std::vector<std::size_t>> Hypergraph::incidence() const {
  std::vector<std::vector<std::size_t>> inc(n_);
  for (std::size_t e = 0; e < edges_.size(); ++e)
    for (NodeId v : edges_[e]) inc[v].push_back(e);
  return inc;
}

Hypergraph Hypergraph::without_edge(std::size_t e) const {
  if (e >= edges_.size()) throw Error(ErrorCode::NotAnEdge, "edge index out of range");
  auto edges = edges_;
  auto weights = weights_;
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
  weights.erase(weights.begin() + static_cast<std::ptrdiff_t>(e));
  return Hypergraph(n_, k_, std::move(edges), std::move(weights));
}

Hypergraph Hypergraph::with_edge(NodeSet nodes, double w) const {
  auto edges = edges_;
  auto weights = weights_;
  edges.push_back(std::move(nodes));
  weights.push_back(w);
  return Hypergraph(n_, k_, std::move(edges), std::move(weights));
}

Hypergraph Hypergraph::with_scaled_weights(double c) const {
  auto weights = weights_;
  for (double& w : weights) w *= c;
  return Hypergraph(n_, k_, edges_, std::move(weights));
}

Hypergraph Hypergraph::relabeled(std::span<const NodeId> perm) const {
  if (perm.size() != n_) throw Error(ErrorCode::InvalidArgument, "permutation size differs from n");
  auto edges = edges_;
  for (auto& nodes : edges)
    for (NodeId& v : nodes) v = perm[v];
  return Hypergraph(n_, k_, std::move(edges), weights_);
}

std::vector<double> degrees(const Hypergraph& h) {
  std::vector<double> d(h.num_nodes(), 0.0);
  for (std::size_t e = 0; e < h.num_edges(); ++e)
    for (NodeId v : h.edge(e)) d[v] += h.weight(e);
  return d;
}

double ReducedGraph::weight(NodeId i, NodeId j) const {
  const auto& row = adj_.at(i);
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const Neighbor& a, NodeId b) { return a.node < b; });
  return (it != row.end() && it->node == j) ? it->weight : 0.0;
}

double ReducedGraph::weighted_degree(NodeId i) const {
  double s = 0.0;
  for (const auto& nb : adj_.at(i)) s += nb.weight;
  return s;
}

std::size_t ReducedGraph::num_edges() const {
  std::size_t m = 0;
  for (const auto& row : adj_) m += row.size();
  return m / 2;
}

void ReducedGraph::add(NodeId i, NodeId j, double w) {
  if (i == j) return;
  adj_.at(i).push_back({j, w});
  adj_.at(j).push_back({i, w});
}

void ReducedGraph::finalize() {
  for (auto& row : adj_) {
    std::sort(row.begin(), row.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    std::vector<Neighbor> merged;
    for (const auto& nb : row) {
      if (!merged.empty() && merged.back().node == nb.node)
        merged.back().weight += nb.weight;
      else
        merged.push_back(nb);
    }
    row = std::move(merged);
  }
}

ReducedGraph clique_expand(const Hypergraph& h) {
  ReducedGraph g(h.num_nodes());
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const auto& nodes = h.edge(e);
    for (std::size_t a = 0; a < nodes.size(); ++a)
      for (std::size_t b = a + 1; b < nodes.size(); ++b) g.add(nodes[a], nodes[b], h.weight(e));
  }
  g.finalize();
  return g;
}

std::optional<NodeId> NodeLabels::find(const std::string& token) const {
  auto it = std::find(tokens.begin(), tokens.end(), token);
  if (it == tokens.end()) return std::nullopt;
  return static_cast<NodeId>(it - tokens.begin());
}

std::string NodeLabels::format(const NodeSet& nodes, char sep) const {
  std::string out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) out += sep;
    out += tokens.empty() ? std::to_string(nodes[i]) : tokens.at(nodes[i]);
  }
  return out;
}

Component largest_component(const Hypergraph& h) {
  const std::size_t n = h.num_nodes();
  std::vector<NodeId> parent(n);
  std::iota(parent.begin(), parent.end(), NodeId{0});
  auto find = [&](NodeId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& nodes : h.edges())
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      NodeId a = find(nodes[0]), b = find(nodes[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

  // Size is counted in edges; ties keep the first root, i.e. smallest node id.
  std::map<NodeId, std::size_t> edge_count;
  for (const auto& nodes : h.edges()) ++edge_count[find(nodes[0])];
  if (edge_count.empty()) return {Hypergraph(0, h.order(), {}), {}};
  NodeId best = edge_count.begin()->first;
  for (const auto& [root, count] : edge_count)
    if (count > edge_count[best]) best = root;

  std::vector<NodeId> remap(n, static_cast<NodeId>(-1));
  std::vector<NodeId> original;
  for (NodeId v = 0; v < n; ++v)
    if (find(v) == best) {
      remap[v] = static_cast<NodeId>(original.size());
      original.push_back(v);
    }
  std::vector<NodeSet> edges;
  std::vector<double> weights;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    if (find(h.edge(e)[0]) != best) continue;
    NodeSet nodes;
    for (NodeId v : h.edge(e)) nodes.push_back(remap[v]);
    edges.push_back(std::move(nodes));
    weights.push_back(h.weight(e));
  }
  return {Hypergraph(original.size(), h.order(), std::move(edges), std::move(weights)),
          std::move(original)};
}

}  // namespace hypred
