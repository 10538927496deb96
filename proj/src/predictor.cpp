#include "hypred/predictor.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace hypred {
namespace {

// Calls fn on every m-subset of `pool` (sorted) in lexicographic order until
// fn returns false.
template <class Fn>
void for_each_subset(const std::vector<NodeId>& pool, std::size_t m, Fn&& fn) {
  if (m > pool.size()) return;
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  NodeSet subset(m);
  while (true) {
    for (std::size_t i = 0; i < m; ++i) subset[i] = pool[idx[i]];
    if (!fn(subset)) return;
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == pool.size() - m + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Ranking rank_by(std::vector<CandidateScore> entries, std::optional<std::size_t> vector_index) {
  std::sort(entries.begin(), entries.end(), [](const CandidateScore& a, const CandidateScore& b) {
    if (a.aggregate != b.aggregate) return a.aggregate < b.aggregate;
    return a.nodes < b.nodes;
  });
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i].rank = i + 1;
  return {vector_index, std::move(entries)};
}

std::vector<Vector> vectors_of(const std::vector<EigenPair>& pairs) {
  std::vector<Vector> out;
  for (const auto& p : pairs) out.push_back(p.vector);
  return out;
}

}  // namespace

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::size_t num = n - k + i;
    if (r > std::numeric_limits<std::size_t>::max() / num) return std::numeric_limits<std::size_t>::max();
    r = r * num / i;
  }
  return r;
}

CandidateSet enumerate_candidates(const Hypergraph& h, std::optional<std::size_t> cap) {
  const std::size_t total = binomial(h.num_nodes(), h.order());
  if (!cap && total > kMaxCandidates)
    throw Error(ErrorCode::TooMany, "C(n,k) = " + std::to_string(total) + " exceeds " +
                                        std::to_string(kMaxCandidates) + "; pass a cap");
  const std::set<NodeSet> existing(h.edges().begin(), h.edges().end());
  std::vector<NodeId> pool(h.num_nodes());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<NodeId>(i);

  CandidateSet out;
  for_each_subset(pool, h.order(), [&](const NodeSet& s) {
    if (existing.count(s)) return true;
    if (cap && out.members.size() >= *cap) {
      out.truncated = true;
      return false;
    }
    out.members.push_back(s);
    return true;
  });
  return out;
}

std::string_view to_string(Aggregation a) noexcept {
  switch (a) {
    case Aggregation::PerVector: return "per_vector";
    case Aggregation::Min: return "min";
    case Aggregation::Mean: return "mean";
  }
  return "per_vector";
}

Aggregation parse_aggregation(std::string_view text) {
  if (text == "per_vector") return Aggregation::PerVector;
  if (text == "min") return Aggregation::Min;
  if (text == "mean") return Aggregation::Mean;
  throw Error(ErrorCode::InvalidArgument, "unknown aggregation '" + std::string(text) + "'");
}

std::optional<std::size_t> Ranking::rank_of(const NodeSet& nodes) const {
  for (const auto& e : entries)
    if (e.nodes == nodes) return e.rank;
  return std::nullopt;
}

std::vector<Ranking> score_candidates(const Hypergraph& h, const std::vector<NodeSet>& candidates,
                                      const std::vector<Vector>& eigvecs, const ScoringOptions& opts) {
  if (eigvecs.empty()) throw Error(ErrorCode::InvalidArgument, "no eigenvectors to score with");
  for (const auto& v : eigvecs)
    if (static_cast<std::size_t>(v.size()) != h.num_nodes())
      throw Error(ErrorCode::InvalidArgument, "eigenvector length differs from node count");
  const auto d = degrees(h);

  std::vector<CandidateScore> scored;
  scored.reserve(candidates.size());
  for (const auto& c : candidates) {
    if (c.size() != h.order()) throw Error(ErrorCode::NonUniform, "candidate has wrong cardinality");
    CandidateScore s;
    s.nodes = c;
    for (const auto& v : eigvecs)
      s.costs.push_back(opts.cost == CandidateCost::AmGm ? amgm_cost(c, v)
                                                              : normalized_amgm_cost(c, v, d));
    scored.push_back(std::move(s));
  }

  std::vector<Ranking> out;
  if (opts.aggregation == Aggregation::PerVector) {
    for (std::size_t j = 0; j < eigvecs.size(); ++j) {
      auto entries = scored;
      for (auto& e : entries) e.aggregate = e.costs[j];
      out.push_back(rank_by(std::move(entries), j));
    }
    return out;
  }
  for (auto& e : scored) {
    if (opts.aggregation == Aggregation::Min) {
      e.aggregate = *std::min_element(e.costs.begin(), e.costs.end());
    } else {
      double sum = 0.0;
      for (double c : e.costs) sum += c;
      e.aggregate = sum / static_cast<double>(e.costs.size());
    }
  }
  out.push_back(rank_by(std::move(scored), std::nullopt));
  return out;
}

PreferentialOrder preferential_order(const Hypergraph& full, const NodeSet& held_out, LaplacianMode mode,
                                     const SolverConfig& cfg, const ScoringOptions& opts) {
  NodeSet target = held_out;
  std::sort(target.begin(), target.end());
  const auto idx = full.find_edge(target);
  if (!idx) throw Error(ErrorCode::NotAnEdge, "held-out set is not an edge of the hypergraph");
  const Hypergraph reduced = full.without_edge(*idx);

  PreferentialOrder out;
  out.fiedler_pairs = fiedler(LaplacianOperator(reduced, mode), cfg);
  out.fiedler_value = out.fiedler_pairs.front().lambda;
  const auto candidates = enumerate_candidates(reduced).members;
  out.candidate_count = candidates.size();
  out.rankings = score_candidates(reduced, candidates, vectors_of(out.fiedler_pairs), opts);
  for (const auto& r : out.rankings) out.ranks.push_back(r.rank_of(target).value());
  out.rank = *std::min_element(out.ranks.begin(), out.ranks.end());
  return out;
}

std::vector<NodeSet> completion_candidates(const Hypergraph& h, const NodeSet& given_in) {
  NodeSet given = given_in;
  std::sort(given.begin(), given.end());
  if (std::adjacent_find(given.begin(), given.end()) != given.end())
    throw Error(ErrorCode::InvalidArgument, "given nodes repeat");
  if (given.size() >= h.order())
    throw Error(ErrorCode::InvalidArgument, "need fewer given nodes than the edge cardinality");
  if (!given.empty() && given.back() >= h.num_nodes())
    throw Error(ErrorCode::InvalidArgument, "given node out of range");

  std::vector<NodeId> pool;
  for (NodeId v = 0; v < h.num_nodes(); ++v)
    if (!std::binary_search(given.begin(), given.end(), v)) pool.push_back(v);
  const std::set<NodeSet> existing(h.edges().begin(), h.edges().end());
  std::vector<NodeSet> out;
  for_each_subset(pool, h.order() - given.size(), [&](const NodeSet& rest) {
    NodeSet c = given;
    c.insert(c.end(), rest.begin(), rest.end());
    std::sort(c.begin(), c.end());
    if (!existing.count(c)) out.push_back(std::move(c));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeSet> Completion::completions(std::size_t ranking) const {
  std::vector<NodeSet> out;
  for (const auto& e : rankings.at(ranking).entries) {
    NodeSet rest;
    std::set_difference(e.nodes.begin(), e.nodes.end(), given.begin(), given.end(),
                        std::back_inserter(rest));
    out.push_back(std::move(rest));
  }
  return out;
}

Completion complete_hyperedge(const Hypergraph& h, const NodeSet& given, LaplacianMode mode,
                              const SolverConfig& cfg, const ScoringOptions& opts) {
  Completion out;
  out.given = given;
  std::sort(out.given.begin(), out.given.end());
  out.candidates = completion_candidates(h, given);
  if (out.candidates.empty()) throw Error(ErrorCode::NoCandidates, "every completion is already an edge");
  out.fiedler_pairs = fiedler(LaplacianOperator(h, mode), cfg);
  out.rankings = score_candidates(h, out.candidates, vectors_of(out.fiedler_pairs), opts);
  return out;
}

}  // namespace hypred
