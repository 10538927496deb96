#include <doctest.h>

#include <sstream>

#include "hypred/hypergraph.hpp"
#include "test_util.hpp"

using namespace hypred;
using namespace hypred::testing;

namespace {

ErrorCode code_of(const std::string& text, std::optional<std::size_t> k = std::nullopt) {
  try {
    parse_hypergraph_string(text, k);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return ErrorCode::Config;
}

}  // namespace

TEST_CASE("parse H5 with 1-based ids") {
  const auto lh = parse_hypergraph_string(kH5);
  CHECK(lh.graph.num_nodes() == 9);
  CHECK(lh.graph.order() == 3);
  CHECK(lh.graph.num_edges() == 7);
  CHECK(lh.labels[0] == "1");
  CHECK(lh.labels[8] == "9");
  CHECK(degrees(lh.graph) == std::vector<double>{2, 3, 2, 3, 1, 3, 2, 3, 2});
}

TEST_CASE("numeric tokens are compacted in numeric order") {
  const auto lh = parse_hypergraph_string("10 2 7\n2 7 30\n");
  CHECK(lh.labels.tokens == std::vector<std::string>{"2", "7", "10", "30"});
  CHECK(lh.graph.edge(0) == NodeSet{0, 1, 2});
}

TEST_CASE("non-numeric tokens keep first-use order") {
  const auto lh = parse_hypergraph_string("b a c\nc d a\n");
  CHECK(lh.labels.tokens == std::vector<std::string>{"b", "a", "c", "d"});
  CHECK(lh.labels.find("d") == NodeId{3});
  CHECK_FALSE(lh.labels.find("z"));
}

TEST_CASE("commas, comments and weights") {
  const auto lh = parse_hypergraph_string("# header\n1,2,3 w=2.5\n\n2 3 4\n");
  CHECK(lh.graph.num_edges() == 2);
  CHECK(lh.graph.weight(0) == 2.5);
  CHECK(lh.graph.weight(1) == 1.0);
}

TEST_CASE("duplicate edges merge by summing weights") {
  const auto lh = parse_hypergraph_string("1 2 3\n3 2 1 w=2\n");
  CHECK(lh.graph.num_edges() == 1);
  CHECK(lh.graph.weight(0) == 3.0);
}

TEST_CASE("parse errors") {
  CHECK(code_of("") == ErrorCode::EmptyInput);
  CHECK(code_of("# only a comment\n") == ErrorCode::EmptyInput);
  CHECK(code_of("1 2 3\n1 2\n") == ErrorCode::NonUniform);
  CHECK(code_of("1 2 3\n", 4) == ErrorCode::NonUniform);
  CHECK(code_of("1 1 2\n") == ErrorCode::RepeatedNode);
  CHECK(code_of("1 2 3 w=0\n") == ErrorCode::BadWeight);
  CHECK(code_of("1 2 3 w=-1\n") == ErrorCode::BadWeight);
  CHECK(code_of("1 2 3 w=abc\n") == ErrorCode::BadWeight);
  CHECK(code_of("w=2\n") == ErrorCode::BadWeight);
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(Hypergraph(3, 3, {{0, 1, 3}}), Error);
  CHECK_THROWS_AS(Hypergraph(4, 3, {{0, 1, 2}, {2, 1, 0}}), Error);
  CHECK_THROWS_AS(Hypergraph(4, 3, {{0, 1, 2}}, {0.0}), Error);
  CHECK_THROWS_AS(Hypergraph(4, 1, {{0}}), Error);
  const Hypergraph h(4, 3, {{2, 0, 1}});
  CHECK(h.edge(0) == NodeSet{0, 1, 2});
}

TEST_CASE("canonical writer round-trips") {
  const auto lh = parse_hypergraph_string("3 2 1 w=0.3\n7 8 9\n4 5 6\n");
  const std::string text = to_string(lh.graph, &lh.labels);
  CHECK(text.find("w=") != std::string::npos);
  CHECK(text.substr(0, 6) == "1 2 3 ");
  const auto again = parse_hypergraph_string(text);
  CHECK(to_string(again.graph, &again.labels) == text);
  CHECK(again.graph.weight(0) == 0.3);
  CHECK(again.labels.tokens == lh.labels.tokens);
  CHECK(to_string(parse_hypergraph_string(kH5).graph).find("w=") == std::string::npos);
}

TEST_CASE("clique expansion") {
  const Hypergraph single(3, 3, {{0, 1, 2}});
  const auto g = clique_expand(single);
  for (NodeId i = 0; i < 3; ++i)
    for (NodeId j = 0; j < 3; ++j) CHECK(g.weight(i, j) == (i == j ? 0.0 : 1.0));

  const auto g5 = clique_expand(h5());
  // Nodes 1 and 2 share two edges.
  CHECK(g5.weight(0, 1) == 2.0);
  CHECK(g5.weight(0, 4) == 0.0);
  CHECK(g5.weighted_degree(0) == 4.0);  // (k-1) d_1
  CHECK(g5.num_edges() == 15);
}

TEST_CASE("clique expansion is permutation-equivariant") {
  std::mt19937_64 rng(3);
  for (int c = 0; c < 20; ++c) {
    const auto h = random_hypergraph(7, 3, 8, rng);
    const auto perm = random_permutation(7, rng);
    const auto g = clique_expand(h), gp = clique_expand(h.relabeled(perm));
    for (NodeId i = 0; i < 7; ++i)
      for (NodeId j = 0; j < 7; ++j) CHECK(g.weight(i, j) == gp.weight(perm[i], perm[j]));
  }
}

TEST_CASE("edge edits") {
  const auto h = h5();
  const auto e = *h.find_edge(one_based({7, 8, 9}));
  const auto h6 = h.without_edge(e);
  CHECK(h6.num_edges() == 6);
  CHECK_FALSE(h6.has_edge(one_based({7, 8, 9})));
  CHECK(h6.with_edge(one_based({7, 8, 9})).num_edges() == 7);
  CHECK(h.with_scaled_weights(2.0).weight(0) == 2.0);
}

TEST_CASE("largest component") {
  const Hypergraph h(8, 2, {{0, 1}, {1, 2}, {4, 5}, {5, 6}, {6, 7}});
  const auto c = largest_component(h);
  CHECK(c.graph.num_nodes() == 4);
  CHECK(c.graph.num_edges() == 3);
  CHECK(c.original_ids == std::vector<NodeId>{4, 5, 6, 7});
}
