#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "hypred/hypergraph.hpp"
#include "hypred/laplacian.hpp"
#include "hypred/predictor.hpp"

namespace hypred::testing {

inline constexpr const char* kH5 = "1 2 3\n1 2 4\n2 3 4\n4 5 6\n6 7 8\n7 8 9\n6 8 9\n";
inline constexpr const char* kH6 = "1 2 3\n1 2 4\n2 3 4\n4 5 6\n6 7 8\n6 8 9\n";
inline constexpr const char* kH4 = "1 2 3 4\n2 3 4 5\n1 2 3 5\n";

inline Hypergraph h5() { return parse_hypergraph_string(kH5).graph; }
inline Hypergraph h4() { return parse_hypergraph_string(kH4).graph; }

// 0-based set from 1-based ids.
inline NodeSet one_based(std::initializer_list<NodeId> ids) {
  NodeSet s;
  for (NodeId v : ids) s.push_back(v - 1);
  std::sort(s.begin(), s.end());
  return s;
}

inline Vector random_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vector x(static_cast<Eigen::Index>(n));
  for (auto& v : x) v = g(rng);
  return x;
}

// Random k-uniform hypergraph on n nodes with 1..max_edges distinct edges and
// weights in [0.5, 2] (or all 1).
inline Hypergraph random_hypergraph(std::size_t n, std::size_t k, std::size_t max_edges, std::mt19937_64& rng,
                                    bool unit_weights = false) {
  std::vector<NodeId> pool(n);
  std::iota(pool.begin(), pool.end(), NodeId{0});
  const std::size_t target =
      std::uniform_int_distribution<std::size_t>(1, std::min(max_edges, binomial(n, k)))(rng);
  std::set<NodeSet> edges;
  while (edges.size() < target) {
    std::shuffle(pool.begin(), pool.end(), rng);
    NodeSet e(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(e.begin(), e.end());
    edges.insert(e);
  }
  std::vector<double> w;
  std::uniform_real_distribution<double> wd(0.5, 2.0);
  for (std::size_t i = 0; i < edges.size(); ++i) w.push_back(unit_weights ? 1.0 : wd(rng));
  return Hypergraph(n, k, {edges.begin(), edges.end()}, w);
}

inline std::vector<NodeId> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<NodeId> p(n);
  std::iota(p.begin(), p.end(), NodeId{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline NodeSet map_set(const NodeSet& s, const std::vector<NodeId>& perm) {
  NodeSet out;
  for (NodeId v : s) out.push_back(perm[v]);
  std::sort(out.begin(), out.end());
  return out;
}

// Vector y with y[perm[i]] = x[i].
inline Vector permute(const Vector& x, const std::vector<NodeId>& perm) {
  Vector y(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) y[perm[static_cast<std::size_t>(i)]] = x[i];
  return y;
}

inline double abs_cos(const Vector& a, const Vector& b) { return std::abs(a.dot(b)) / (a.norm() * b.norm()); }

}  // namespace hypred::testing
