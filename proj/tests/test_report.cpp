#include <doctest.h>

#include <sstream>

#include "hypred/report.hpp"
#include "test_util.hpp"

using namespace hypred;
using namespace hypred::testing;

TEST_CASE("six significant digits") {
  CHECK(report::sig6(0.0569426123) == "0.0569426");
  CHECK(report::sig6(3.33612345e-4) == "0.000333612");
  CHECK(report::sig6(-0.0) == "0");
  CHECK(report::sig6(1234567.0) == "1.23457e+06");
}

TEST_CASE("ranking TSV uses original labels") {
  const auto lh = parse_hypergraph_string("a b c\nb c d\n");
  Ranking r;
  r.vector_index = 0;
  r.entries.push_back({{0, 2, 3}, {0.25}, 0.25, 1});
  std::ostringstream out;
  report::write_rankings(out, {r}, lh.labels, std::nullopt, report::Format::Tsv);
  CHECK(out.str() == "# vector 1\nrank\tnodes\tcost_v1\taggregate\n1\ta,c,d\t0.25\t0.25\n");
}

TEST_CASE("ranking JSON keeps full precision") {
  const auto lh = parse_hypergraph_string(kH5);
  Ranking r;
  r.entries.push_back({one_based({6, 7, 9}), {0.1234567891234}, 0.1234567891234, 1});
  const auto j = report::to_json(r, lh.labels, std::nullopt);
  CHECK(j["vector"].is_null());
  CHECK(j["entries"][0]["aggregate"].get<double>() == 0.1234567891234);
  CHECK(j["entries"][0]["nodes"][0] == "6");
}

TEST_CASE("baseline table sorted by score") {
  const auto lh = parse_hypergraph_string(kH5);
  std::ostringstream out;
  report::write_baseline_scores(out, {{{0, 1, 2}, "cn", 1.0}, {{0, 1, 3}, "cn", 3.0}}, lh.labels, 1,
                                report::Format::Tsv);
  CHECK(out.str() == "method\trank\tnodes\tscore\ncn\t1\t1,2,4\t3\n");
}

TEST_CASE("format parsing") {
  CHECK(report::parse_format("json") == report::Format::Json);
  CHECK_THROWS_AS(report::parse_format("xml"), Error);
}
