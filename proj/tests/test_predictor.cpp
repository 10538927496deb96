#include <doctest.h>

#include <map>

#include "hypred/predictor.hpp"
#include "test_util.hpp"

using namespace hypred;
using namespace hypred::testing;

namespace {

std::vector<Vector> vecs(const std::vector<EigenPair>& pairs) {
  std::vector<Vector> out;
  for (const auto& p : pairs) out.push_back(p.vector);
  return out;
}

const std::vector<EigenPair>& h5_fiedler() {
  static const auto f = fiedler(LaplacianOperator(h5(), LaplacianMode::Unnormalized), SolverConfig{});
  return f;
}

}  // namespace

TEST_CASE("candidate counts") {
  CHECK(enumerate_candidates(h5()).members.size() == 77);
  const auto h6 = h5().without_edge(*h5().find_edge(one_based({7, 8, 9})));
  CHECK(enumerate_candidates(h6).members.size() == 78);
  CHECK(enumerate_candidates(Hypergraph(3, 3, {{0, 1, 2}})).members.empty());
  const auto capped = enumerate_candidates(h5(), 10);
  CHECK(capped.members.size() == 10);
  CHECK(capped.truncated);
  CHECK(capped.members.front() == NodeSet{0, 1, 4});
  CHECK_THROWS_AS(enumerate_candidates(Hypergraph(200, 4, {{0, 1, 2, 3}})), Error);
  CHECK(binomial(9, 3) == 84);
  CHECK(binomial(12, 3) - 9 == 211);
}

TEST_CASE("H5 unnormalized per-vector ranking") {
  const auto& f = h5_fiedler();
  const auto rankings = score_candidates(h5(), enumerate_candidates(h5()).members, vecs(f));
  REQUIRE(rankings.size() == 4);
  const auto& r = rankings[0];
  CHECK(r.entries[0].nodes == one_based({6, 7, 9}));
  CHECK(r.entries[0].aggregate == doctest::Approx(0.00283021).epsilon(1e-4));
  CHECK(r.rank_of(one_based({1, 3, 4})) == 3u);
  CHECK(r.entries[2].aggregate == doctest::Approx(0.0141916).epsilon(1e-4));
  CHECK(rankings[2].entries[0].nodes == one_based({1, 3, 4}));
  for (const auto& rk : rankings)
    for (std::size_t i = 0; i < rk.entries.size(); ++i) CHECK(rk.entries[i].rank == i + 1);
}

TEST_CASE("H5 automorphism maps one ranking class onto the other") {
  // 1<->9, 2<->8, 3<->7, 4<->6 fixing 5, i.e. i -> 10 - i.
  std::vector<NodeId> perm(9);
  for (NodeId i = 0; i < 9; ++i) perm[i] = 8 - i;
  const auto& f = h5_fiedler();
  const auto rankings = score_candidates(h5(), enumerate_candidates(h5()).members, vecs(f));
  std::map<NodeSet, double> col1, col3;
  for (const auto& e : rankings[0].entries) col1[e.nodes] = e.aggregate;
  for (const auto& e : rankings[3].entries) col3[e.nodes] = e.aggregate;
  for (const auto& [nodes, cost] : col1) CHECK(col3.at(map_set(nodes, perm)) == doctest::Approx(cost).epsilon(1e-9));
}

TEST_CASE("H5 normalized top cost") {
  const auto f = fiedler(LaplacianOperator(h5(), LaplacianMode::Normalized), SolverConfig{});
  const auto rankings = score_candidates(h5(), enumerate_candidates(h5()).members, vecs(f));
  for (const auto& r : rankings) {
    CHECK(r.entries[0].aggregate == doctest::Approx(3.33612e-4).epsilon(1e-4));
    const bool is_pair = r.entries[0].nodes == one_based({6, 7, 9}) || r.entries[0].nodes == one_based({1, 3, 4});
    CHECK(is_pair);
  }
}

TEST_CASE("aggregations") {
  const auto& f = h5_fiedler();
  const auto cands = enumerate_candidates(h5()).members;
  const auto mn = score_candidates(h5(), cands, vecs(f), {Aggregation::Min, CandidateCost::AmGm});
  const auto mean = score_candidates(h5(), cands, vecs(f), {Aggregation::Mean, CandidateCost::AmGm});
  REQUIRE(mn.size() == 1);
  CHECK_FALSE(mn[0].vector_index);
  for (const auto& e : mn[0].entries) CHECK(e.aggregate == *std::min_element(e.costs.begin(), e.costs.end()));
  for (const auto& e : mean[0].entries)
    CHECK(e.aggregate == doctest::Approx((e.costs[0] + e.costs[1] + e.costs[2] + e.costs[3]) / 4));
  CHECK(parse_aggregation("mean") == Aggregation::Mean);
  CHECK_THROWS_AS(parse_aggregation("max"), Error);
}

TEST_CASE("ties break lexicographically") {
  const Hypergraph h(5, 3, {{0, 1, 2}});
  const auto r = score_candidates(h, enumerate_candidates(h).members, {Vector::Constant(5, 0.5)}).front();
  for (std::size_t i = 1; i < r.entries.size(); ++i) CHECK(r.entries[i - 1].nodes < r.entries[i].nodes);
}

TEST_CASE("scaling the vector keeps the order") {
  std::mt19937_64 rng(12);
  const auto h = h5();
  const auto cands = enumerate_candidates(h).members;
  const Vector x = random_vector(9, rng);
  const auto a = score_candidates(h, cands, {x}).front(), b = score_candidates(h, cands, {2.0 * x}).front();
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].nodes == b.entries[i].nodes);
    CHECK(b.entries[i].aggregate == doctest::Approx(8.0 * a.entries[i].aggregate));
  }
}

TEST_CASE("odd k: flipping the vector negates the costs") {
  std::mt19937_64 rng(13);
  const auto h = h5();
  const auto cands = enumerate_candidates(h).members;
  const Vector x = random_vector(9, rng);
  const auto a = score_candidates(h, cands, {x}).front(), b = score_candidates(h, cands, {Vector(-x)}).front();
  std::map<NodeSet, double> ca;
  for (const auto& e : a.entries) ca[e.nodes] = e.aggregate;
  for (const auto& e : b.entries) CHECK(e.aggregate == doctest::Approx(-ca.at(e.nodes)));
}

TEST_CASE("even k costs are nonnegative") {
  std::mt19937_64 rng(14);
  const auto h = h4();
  const auto r = score_candidates(h, enumerate_candidates(h).members, {random_vector(5, rng)}).front();
  for (const auto& e : r.entries) CHECK(e.aggregate >= -1e-15);
}

TEST_CASE("preferential order of {7,8,9}") {
  for (auto mode : {LaplacianMode::Unnormalized, LaplacianMode::Normalized}) {
    const auto po = preferential_order(h5(), one_based({9, 7, 8}), mode, SolverConfig{});
    CHECK(po.candidate_count == 78);
    CHECK(po.rank == 2);
    CHECK(po.rankings[0].entries[0].nodes == one_based({1, 3, 4}));
    // Rank equals 1 + number of strictly cheaper candidates (no ties here).
    const auto& r = po.rankings[0];
    const double cost = r.entries[*r.rank_of(one_based({7, 8, 9})) - 1].aggregate;
    std::size_t cheaper = 0;
    for (const auto& e : r.entries) cheaper += e.aggregate < cost;
    CHECK(po.ranks[0] == cheaper + 1);
  }
  CHECK_THROWS_AS(preferential_order(h5(), one_based({1, 5, 9}), LaplacianMode::Unnormalized, SolverConfig{}),
                  Error);
}

TEST_CASE("held-out edge that isolates a node") {
  const auto po = preferential_order(h5(), one_based({4, 5, 6}), LaplacianMode::Unnormalized, SolverConfig{});
  CHECK(po.rank >= 1);
  CHECK(po.rank <= po.candidate_count);
}

TEST_CASE("completion") {
  const auto h6 = h5().without_edge(*h5().find_edge(one_based({7, 8, 9})));
  const auto c = complete_hyperedge(h6, one_based({7, 8}), LaplacianMode::Unnormalized, SolverConfig{},
                                    {Aggregation::Min, CandidateCost::AmGm});
  CHECK(c.candidates.size() == 6);  // node 6 would recreate {6,7,8}
  const auto rest = c.completions();
  const bool nine_in_top2 = rest[0] == NodeSet{8} || rest[1] == NodeSet{8};
  CHECK(nine_in_top2);

  CHECK_THROWS_AS(completion_candidates(h5(), one_based({1, 2, 3})), Error);
  CHECK_THROWS_AS(completion_candidates(h5(), NodeSet{1, 1}), Error);
  CHECK_THROWS_AS(completion_candidates(h5(), NodeSet{42}), Error);
  CHECK(completion_candidates(h5(), {}) == enumerate_candidates(h5()).members);
  CHECK_THROWS_AS(complete_hyperedge(Hypergraph(3, 3, {{0, 1, 2}}), NodeSet{0}, LaplacianMode::Unnormalized,
                                     SolverConfig{}),
                  Error);
}

TEST_CASE("score_candidates validation") {
  CHECK_THROWS_AS(score_candidates(h5(), {}, {}), Error);
  CHECK_THROWS_AS(score_candidates(h5(), {}, {Vector::Ones(3)}), Error);
  CHECK_THROWS_AS(score_candidates(h5(), {NodeSet{0, 1}}, {Vector::Ones(9)}), Error);
}
