#include "hypred/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace hypred::report {

using nlohmann::ordered_json;

Format parse_format(std::string_view text) {
  if (text == "tsv") return Format::Tsv;
  if (text == "json") return Format::Json;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(text) + "'");
}

std::string sig6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);  // no "-0"
  return buf;
}

namespace {

ordered_json nodes_json(const NodeSet& s, const NodeLabels& labels) {
  ordered_json a = ordered_json::array();
  for (NodeId v : s) a.push_back(labels[v]);
  return a;
}

std::string_view kind_name(EigenKind k) { return k == EigenKind::Zero ? "zero" : "positive"; }

}  // namespace

ordered_json to_json(const EigenPair& p, const NodeLabels& labels) {
  ordered_json j;
  j["lambda"] = p.lambda;
  j["residual"] = p.residual;
  j["kind"] = kind_name(p.kind);
  ordered_json vec = ordered_json::object();
  for (Eigen::Index i = 0; i < p.vector.size(); ++i) vec[labels[static_cast<NodeId>(i)]] = p.vector[i];
  j["vector"] = std::move(vec);
  return j;
}

ordered_json to_json(const Ranking& r, const NodeLabels& labels, std::optional<std::size_t> top) {
  ordered_json j;
  j["vector"] = r.vector_index ? ordered_json(*r.vector_index + 1) : ordered_json(nullptr);
  ordered_json entries = ordered_json::array();
  const std::size_t n = std::min(r.entries.size(), top.value_or(r.entries.size()));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = r.entries[i];
    entries.push_back({{"rank", e.rank}, {"nodes", nodes_json(e.nodes, labels)}, {"costs", e.costs},
                       {"aggregate", e.aggregate}});
  }
  j["entries"] = std::move(entries);
  return j;
}

ordered_json to_json(const eval::ExperimentReport& r) {
  ordered_json j;
  j["seed"] = r.seed;
  j["subject"] = eval::to_string(r.subject);
  ordered_json methods = ordered_json::array();
  for (const auto& m : r.methods)
    methods.push_back({{"method", eval::to_string(m.method)}, {"mean_avg_f1", m.mean}, {"stddev", m.stddev},
                       {"avg_f1", m.avg_f1}});
  j["methods"] = std::move(methods);
  ordered_json runs = ordered_json::array();
  for (const auto& run : r.runs) {
    ordered_json o;
    o["run"] = run.run_index;
    o["removed"] = run.removed;
    o["negatives"] = run.negatives;
    o["pi"] = run.pi ? ordered_json(*run.pi) : ordered_json(nullptr);
    o["best_baseline"] = run.best_baseline ? ordered_json(eval::to_string(*run.best_baseline)) : ordered_json(nullptr);
    o["spectral_degenerate"] = run.spectral_degenerate;
    runs.push_back(std::move(o));
  }
  j["runs"] = std::move(runs);
  j["pi_mean"] = r.pi_mean ? ordered_json(*r.pi_mean) : ordered_json(nullptr);
  return j;
}

void write_eigenpairs(std::ostream& out, const EigenSearch& search, const std::vector<EigenPair>& fiedler,
                      const NodeLabels& labels, Format fmt) {
  if (fmt == Format::Json) {
    ordered_json j;
    j["converged"] = search.converged;
    j["starts"] = search.starts;
    ordered_json all = ordered_json::array(), f = ordered_json::array();
    for (const auto& p : search.pairs) all.push_back(to_json(p, labels));
    for (const auto& p : fiedler) f.push_back(to_json(p, labels));
    j["pairs"] = std::move(all);
    j["fiedler_value"] = fiedler.empty() ? ordered_json(nullptr) : ordered_json(fiedler.front().lambda);
    j["fiedler"] = std::move(f);
    out << j.dump(2) << '\n';
    return;
  }
  auto header = [&] {
    out << "set\tkind\tlambda\tresidual";
    for (const auto& t : labels.tokens) out << '\t' << t;
    out << '\n';
  };
  auto row = [&](std::string_view set, const EigenPair& p) {
    out << set << '\t' << kind_name(p.kind) << '\t' << sig6(p.lambda) << '\t' << sig6(p.residual);
    for (Eigen::Index i = 0; i < p.vector.size(); ++i) out << '\t' << sig6(p.vector[i]);
    out << '\n';
  };
  header();
  for (const auto& p : search.pairs) row("all", p);
  for (const auto& p : fiedler) row("fiedler", p);
}

void write_rankings(std::ostream& out, const std::vector<Ranking>& rankings, const NodeLabels& labels,
                    std::optional<std::size_t> top, Format fmt) {
  if (fmt == Format::Json) {
    ordered_json j = ordered_json::array();
    for (const auto& r : rankings) j.push_back(to_json(r, labels, top));
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto& r : rankings) {
    if (r.vector_index) out << "# vector " << *r.vector_index + 1 << '\n';
    const std::size_t costs = r.entries.empty() ? 0 : r.entries.front().costs.size();
    out << "rank\tnodes";
    for (std::size_t c = 0; c < costs; ++c) out << "\tcost_v" << c + 1;
    out << "\taggregate\n";
    const std::size_t n = std::min(r.entries.size(), top.value_or(r.entries.size()));
    for (std::size_t i = 0; i < n; ++i) {
      const auto& e = r.entries[i];
      out << e.rank << '\t' << labels.format(e.nodes);
      for (double c : e.costs) out << '\t' << sig6(c);
      out << '\t' << sig6(e.aggregate) << '\n';
    }
  }
}

void write_baseline_scores(std::ostream& out, std::vector<baselines::BaselineScore> scores,
                           const NodeLabels& labels, std::optional<std::size_t> top, Format fmt) {
  std::stable_sort(scores.begin(), scores.end(), [](const auto& a, const auto& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.nodes < b.nodes;
  });
  const std::size_t n = std::min(scores.size(), top.value_or(scores.size()));
  if (fmt == Format::Json) {
    ordered_json j = ordered_json::array();
    for (std::size_t i = 0; i < n; ++i)
      j.push_back({{"method", scores[i].method}, {"rank", i + 1}, {"nodes", nodes_json(scores[i].nodes, labels)},
                   {"score", scores[i].score}});
    out << j.dump(2) << '\n';
    return;
  }
  out << "method\trank\tnodes\tscore\n";
  for (std::size_t i = 0; i < n; ++i)
    out << scores[i].method << '\t' << i + 1 << '\t' << labels.format(scores[i].nodes) << '\t'
        << sig6(scores[i].score) << '\n';
}

void write_node_sets(std::ostream& out, const std::vector<NodeSet>& sets, const NodeLabels& labels, Format fmt) {
  if (fmt == Format::Json) {
    ordered_json j = ordered_json::array();
    for (const auto& s : sets) j.push_back(nodes_json(s, labels));
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto& s : sets) out << labels.format(s, ' ') << '\n';
}

void write_experiment_table(std::ostream& out, const eval::ExperimentReport& r) {
  out << "method\tmean_avg_f1\tstddev\n";
  for (const auto& m : r.methods)
    out << eval::to_string(m.method) << '\t' << sig6(m.mean) << '\t' << sig6(m.stddev) << '\n';
  out << "\nrun\tremoved\tnegatives";
  for (const auto& m : r.methods) out << '\t' << eval::to_string(m.method);
  out << "\tbest_baseline\tpi\n";
  for (std::size_t i = 0; i < r.runs.size(); ++i) {
    const auto& run = r.runs[i];
    out << run.run_index << '\t' << run.removed << '\t' << run.negatives;
    for (const auto& m : r.methods) out << '\t' << sig6(m.avg_f1[i]);
    out << '\t' << (run.best_baseline ? eval::to_string(*run.best_baseline) : "-") << '\t'
        << (run.pi ? sig6(*run.pi) : "-") << '\n';
  }
  out << "\npi_mean\t" << (r.pi_mean ? sig6(*r.pi_mean) : "-") << '\n';
}

}  // namespace hypred::report
