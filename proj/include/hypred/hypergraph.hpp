#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypred/error.hpp"

namespace hypred {

using NodeId = std::uint32_t;
using NodeSet = std::vector<NodeId>;  // always sorted ascending

/**
 * k-uniform hypergraph with positive edge weights.
 *
 * Nodes are dense ids 0..n-1. Every edge holds exactly k distinct ids stored
 * ascending; no two edges are equal as sets. Immutable once constructed.
 */
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Validates and canonicalizes (sorts each edge). Throws Error on any
  /// violated invariant; duplicate edges are rejected here, merging happens
  /// in the parser.
  Hypergraph(std::size_t n, std::size_t k, std::vector<NodeSet> edges,
             std::vector<double> weights = {});

  std::size_t num_nodes() const noexcept { return n_; }
  std::size_t order() const noexcept { return k_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const std::vector<NodeSet>& edges() const noexcept { return edges_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  const NodeSet& edge(std::size_t e) const { return edges_.at(e); }
  double weight(std::size_t e) const { return weights_.at(e); }

  /// Index of the edge equal to `nodes` (sorted), if present.
  std::optional<std::size_t> find_edge(const NodeSet& nodes) const;
  bool has_edge(const NodeSet& nodes) const { return find_edge(nodes).has_value(); }

  /// Incident edge indices per node.
  std::vector<std::vector<std::size_t>> incidence() const;

  Hypergraph without_edge(std::size_t e) const;
  Hypergraph with_edge(NodeSet nodes, double w = 1.0) const;
  Hypergraph with_scaled_weights(double c) const;
  /// Relabels node i as perm[i]; edge order follows the original.
  Hypergraph relabeled(std::span<const NodeId> perm) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 2;
  std::vector<NodeSet> edges_;
  std::vector<double> weights_;
};

/// Nonnegative weighted degree per node: d_i = sum of w_e over edges containing i.
std::vector<double> degrees(const Hypergraph& h);

/**
 * Clique-expanded graph A_r = H W H^T - D, stored as sorted adjacency lists.
 * Entry (i,j), i != j, is the total weight of edges containing both i and j.
 */
class ReducedGraph {
 public:
  struct Neighbor {
    NodeId node;
    double weight;
    friend bool operator==(const Neighbor&, const Neighbor&) = default;
  };

  explicit ReducedGraph(std::size_t n = 0) : adj_(n) {}

  std::size_t num_nodes() const noexcept { return adj_.size(); }
  std::span<const Neighbor> neighbors(NodeId i) const { return adj_.at(i); }
  double weight(NodeId i, NodeId j) const;
  double weighted_degree(NodeId i) const;
  std::size_t num_edges() const;

  /// Accumulates w on (i,j) and (j,i); i != j.
  void add(NodeId i, NodeId j, double w);
  /// Sorts neighbor lists; call once after the last add().
  void finalize();

  friend bool operator==(const ReducedGraph&, const ReducedGraph&) = default;

 private:
  std::vector<std::vector<Neighbor>> adj_;
};

ReducedGraph clique_expand(const Hypergraph& h);

/// Mapping from dense ids back to the tokens used in the source file.
struct NodeLabels {
  std::vector<std::string> tokens;

  const std::string& operator[](NodeId i) const { return tokens.at(i); }
  std::optional<NodeId> find(const std::string& token) const;
  std::string format(const NodeSet& nodes, char sep = ',') const;
};

struct LabeledHypergraph {
  Hypergraph graph;
  NodeLabels labels;
};

/**
 * Parses the hyperedge-list text format: one edge per line, node tokens
 * separated by whitespace or commas, optional trailing "w=<weight>", '#'
 * comment lines. Duplicate edges merge by summing weights. Integer-valued
 * tokens are compacted in numeric order, otherwise in order of first use.
 */
LabeledHypergraph parse_hypergraph(std::istream& in,
                                   std::optional<std::size_t> k_expected = std::nullopt);
LabeledHypergraph parse_hypergraph_string(const std::string& text,
                                          std::optional<std::size_t> k_expected = std::nullopt);
LabeledHypergraph load_hypergraph(const std::string& path,
                                  std::optional<std::size_t> k_expected = std::nullopt);

/// Canonical writer: sorted edges and node ids, "w=" only when weight != 1.
void write_hypergraph(std::ostream& out, const Hypergraph& h, const NodeLabels* labels = nullptr);
std::string to_string(const Hypergraph& h, const NodeLabels* labels = nullptr);

struct Component {
  Hypergraph graph;
  std::vector<NodeId> original_ids;  // new id -> id in the source hypergraph
};

/// Sub-hypergraph on the largest edge-connected component. Ties go to the
/// component holding the smallest node id. Isolated nodes never count.
Component largest_component(const Hypergraph& h);

}  // namespace hypred
