#include <doctest.h>

#include "hypred/baselines.hpp"
#include "test_util.hpp"

using namespace hypred;
using namespace hypred::testing;

namespace {

Matrix dense_adjacency(const ReducedGraph& g) {
  Matrix a = Matrix::Zero(g.num_nodes(), g.num_nodes());
  for (NodeId i = 0; i < g.num_nodes(); ++i)
    for (const auto& nb : g.neighbors(i)) a(i, nb.node) = nb.weight;
  return a;
}

}  // namespace

TEST_CASE("common neighbours") {
  // K4 as a graph: every pair shares the two other nodes.
  const Hypergraph k4(4, 2, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const auto g = clique_expand(k4);
  CHECK(baselines::cn_score(g, {0, 1}) == 2.0);
  CHECK(baselines::cn_score(g, {0, 1, 2}) == 6.0);

  // H5, candidate {1,3,4}: brute-force neighbour intersection on A_r.
  const auto g5 = clique_expand(h5());
  const Matrix a = dense_adjacency(g5);
  const NodeSet c = one_based({1, 3, 4});
  double expected = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      for (Eigen::Index z = 0; z < 9; ++z) expected += (a(c[i], z) != 0.0 && a(c[j], z) != 0.0);
  CHECK(baselines::cn_score(g5, c) == expected);
  CHECK(expected == 6.0);
}

TEST_CASE("Katz matches the truncated series") {
  std::mt19937_64 rng(21);
  for (int c = 0; c < 10; ++c) {
    const auto g = clique_expand(random_hypergraph(7, 3, 6, rng));
    const double rho = baselines::spectral_radius(g);
    const double beta = 0.3 / std::max(rho, 1.0);
    const baselines::KatzIndex katz(g, beta);
    const Matrix a = dense_adjacency(g);
    Matrix sum = Matrix::Zero(7, 7), power = Matrix::Identity(7, 7);
    for (int l = 1; l <= 60; ++l) {
      power = beta * power * a;
      sum += power;
    }
    CHECK((katz.matrix() - sum).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("Katz on a single edge") {
  const auto g = clique_expand(Hypergraph(2, 2, {{0, 1}}));
  const baselines::KatzIndex katz(g, 0.5);
  CHECK(katz.pair(0, 1) == doctest::Approx(2.0 / 3.0));
  CHECK_THROWS_AS(baselines::KatzIndex(g, 1.0), Error);
  CHECK_THROWS_AS(baselines::KatzIndex(g, 0.0), Error);
  CHECK(baselines::default_katz_beta(g) == 0.05);
}

TEST_CASE("default Katz beta halves below 0.9 / rho") {
  std::vector<NodeSet> edges;
  for (NodeId i = 0; i < 40; ++i)
    for (NodeId j = i + 1; j < 40; ++j) edges.push_back({i, j});
  const auto g = clique_expand(Hypergraph(40, 2, edges));
  const double beta = baselines::default_katz_beta(g);
  CHECK(beta == 0.0125);  // rho = 39
  CHECK(beta * baselines::spectral_radius(g) < 0.9);
  const auto scores = baselines::katz_scores(g, beta, {{0, 1}});
  CHECK(scores[0].method == "katz");
}

TEST_CASE("resource allocation") {
  // Path 0-1-2: RA(0,2) = 1 / d(1).
  const Hypergraph p3(3, 2, {{0, 1}, {1, 2}});
  const baselines::ResourceAllocation ra(p3);
  CHECK(ra.pair(0, 2) == doctest::Approx(0.5));
  CHECK(ra.pair(0, 1) == 0.0);
  CHECK(baselines::hpra_score(p3, {0, 2}) == doctest::Approx(0.5));
}

TEST_CASE("degree-preserving reduction keeps hypergraph degrees") {
  std::mt19937_64 rng(22);
  const auto h = random_hypergraph(8, 4, 10, rng);
  const auto g = baselines::degree_preserving_reduction(h);
  const auto d = degrees(h);
  for (NodeId i = 0; i < 8; ++i) CHECK(g.weighted_degree(i) == doctest::Approx(d[i]));
}

TEST_CASE("HPRA averages pairs") {
  const auto h = h5();
  const baselines::ResourceAllocation ra(h);
  const NodeSet c = one_based({1, 3, 4});
  const double mean = (ra.pair(c[0], c[1]) + ra.pair(c[0], c[2]) + ra.pair(c[1], c[2])) / 3.0;
  CHECK(ra.score(c) == doctest::Approx(mean));
  // 1 and 3 share neighbours 2 (d=3) and 4 (d=3).
  CHECK(ra.pair(c[0], c[1]) == doctest::Approx(2.0 / 3.0));
}
