#include "hypred/eval_harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "hypred/baselines.hpp"

namespace hypred::eval {
namespace {

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t size) {
  return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void SplitSpec::validate() const {
  if (!(fraction > 0.0 && fraction < 1.0)) throw Error(ErrorCode::Config, "fraction must lie in (0,1)");
  if (!(negative_multiplier >= 1.0)) throw Error(ErrorCode::Config, "negative multiplier must be >= 1");
  if (runs < 1) throw Error(ErrorCode::Config, "run count must be >= 1");
}

Split split(const Hypergraph& h, const SplitSpec& spec, std::size_t run_index) {
  spec.validate();
  const auto remove = static_cast<std::size_t>(std::floor(spec.fraction * static_cast<double>(h.num_edges())));
  if (remove < 1)
    throw Error(ErrorCode::TooFewEdges, "floor(" + std::to_string(spec.fraction) + " * " +
                                            std::to_string(h.num_edges()) + ") removes no edge");
  std::vector<std::size_t> idx(h.num_edges());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  auto rng = make_rng(spec.seed, 1, run_index);
  std::shuffle(idx.begin(), idx.end(), rng);
  std::vector<bool> drop(h.num_edges(), false);
  for (std::size_t i = 0; i < remove; ++i) drop[idx[i]] = true;

  Split out;
  std::vector<NodeSet> edges;
  std::vector<double> weights;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    if (drop[e]) {
      out.removed.push_back(h.edge(e));
    } else {
      edges.push_back(h.edge(e));
      weights.push_back(h.weight(e));
    }
  }
  std::sort(out.removed.begin(), out.removed.end());
  out.train = Hypergraph(h.num_nodes(), h.order(), std::move(edges), std::move(weights));
  return out;
}

std::vector<NodeSet> negative_sample(const Hypergraph& train, std::size_t count, std::uint64_t seed,
                                     const Hypergraph* original) {
  const ReducedGraph g = clique_expand(train);
  std::vector<std::pair<NodeId, NodeId>> graph_edges;
  for (NodeId u = 0; u < g.num_nodes(); ++u)
    for (const auto& nb : g.neighbors(u))
      if (u < nb.node) graph_edges.emplace_back(u, nb.node);
  if (graph_edges.empty()) throw Error(ErrorCode::InvalidArgument, "clique expansion has no edges");

  const std::size_t k = train.order();
  std::set<NodeSet> forbidden(train.edges().begin(), train.edges().end());
  if (original) forbidden.insert(original->edges().begin(), original->edges().end());
  std::set<NodeSet> seen;
  std::vector<NodeSet> out;
  auto rng = make_rng(seed, 2, 0);
  const std::size_t max_attempts = 1000 * std::max<std::size_t>(count, 1);

  auto fresh_neighbor = [&](NodeId v, const NodeSet& current) -> std::optional<NodeId> {
    std::vector<NodeId> options;
    for (const auto& nb : g.neighbors(v))
      if (std::find(current.begin(), current.end(), nb.node) == current.end()) options.push_back(nb.node);
    if (options.empty()) return std::nullopt;
    return options[uniform_index(rng, options.size())];
  };

  for (std::size_t attempt = 0; out.size() < count; ++attempt) {
    if (attempt >= max_attempts)
      throw Error(ErrorCode::SamplingExhausted, "accepted " + std::to_string(out.size()) + " of " +
                                                    std::to_string(count) + " negatives");
    auto [u, v] = graph_edges[uniform_index(rng, graph_edges.size())];
    NodeSet current{u, v};
    if (k == 2) {
      // A sampled pair is always an existing edge; step one hop past v instead.
      auto w = fresh_neighbor(v, current);
      if (!w) continue;
      current = {u, *w};
    }
    bool dead = false;
    while (current.size() < k && !dead) {
      // Re-draw the anchor among members that still have unused neighbors.
      std::vector<NodeId> anchors;
      for (NodeId m : current)
        if (fresh_neighbor(m, current)) anchors.push_back(m);
      if (anchors.empty()) {
        dead = true;
        break;
      }
      const NodeId anchor = anchors[uniform_index(rng, anchors.size())];
      current.push_back(*fresh_neighbor(anchor, current));
    }
    if (dead) continue;
    std::sort(current.begin(), current.end());
    if (forbidden.count(current) || seen.count(current)) continue;
    seen.insert(current);
    out.push_back(std::move(current));
  }
  return out;
}

double f1(const NodeSet& a, const NodeSet& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t common = 0;
  for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return 2.0 * static_cast<double>(common) / static_cast<double>(a.size() + b.size());
}

double avg_f1(const std::vector<NodeSet>& predicted, const std::vector<NodeSet>& truth) {
  if (predicted.empty() || truth.empty()) throw Error(ErrorCode::EmptyInput, "avg_f1 needs two non-empty lists");
  auto best_match_mean = [](const std::vector<NodeSet>& from, const std::vector<NodeSet>& to) {
    double total = 0.0;
    for (const auto& a : from) {
      double best = 0.0;
      for (const auto& b : to) best = std::max(best, f1(a, b));
      total += best;
    }
    return total / static_cast<double>(from.size());
  };
  return 0.5 * (best_match_mean(truth, predicted) + best_match_mean(predicted, truth));
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::CommonNeighbors: return "cn";
    case Method::Katz: return "katz";
    case Method::Hpra: return "hpra";
    case Method::Spectral: return "spectral";
    case Method::Random: return "random";
    case Method::Oracle: return "oracle";
  }
  return "unknown";
}

Method parse_method(std::string_view text) {
  for (Method m : {Method::CommonNeighbors, Method::Katz, Method::Hpra, Method::Spectral, Method::Random,
                   Method::Oracle})
    if (text == to_string(m)) return m;
  throw Error(ErrorCode::Config, "unknown method '" + std::string(text) + "'");
}

std::vector<double> score_pool(Method m, const Hypergraph& train, const std::vector<NodeSet>& pool,
                               const std::vector<NodeSet>& removed, const ExperimentConfig& cfg,
                               std::uint64_t run_seed, bool* degenerate) {
  std::vector<double> scores(pool.size(), 0.0);
  switch (m) {
    case Method::CommonNeighbors: {
      const ReducedGraph g = clique_expand(train);
      for (std::size_t i = 0; i < pool.size(); ++i) scores[i] = baselines::cn_score(g, pool[i]);
      break;
    }
    case Method::Katz: {
      const ReducedGraph g = clique_expand(train);
      const baselines::KatzIndex katz(g, baselines::default_katz_beta(g));
      for (std::size_t i = 0; i < pool.size(); ++i) scores[i] = katz.score(pool[i]);
      break;
    }
    case Method::Hpra: {
      const baselines::ResourceAllocation ra(train);
      for (std::size_t i = 0; i < pool.size(); ++i) scores[i] = ra.score(pool[i]);
      break;
    }
    case Method::Spectral: {
      std::vector<EigenPair> pairs;
      try {
        pairs = fiedler(LaplacianOperator(train, cfg.mode), cfg.solver);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoPositiveEigenpair) throw;
        if (degenerate) *degenerate = true;
        break;
      }
      std::vector<Vector> vecs;
      for (const auto& p : pairs) vecs.push_back(p.vector);
      ScoringOptions opts = cfg.scoring;
      if (opts.aggregation == Aggregation::PerVector) opts.aggregation = Aggregation::Min;
      const auto ranking = score_candidates(train, pool, vecs, opts).front();
      for (const auto& e : ranking.entries) {
        const auto it = std::lower_bound(pool.begin(), pool.end(), e.nodes);
        scores[static_cast<std::size_t>(it - pool.begin())] = -e.aggregate;
      }
      break;
    }
    case Method::Random: {
      auto rng = make_rng(run_seed, 3, 0);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      for (double& s : scores) s = unit(rng);
      break;
    }
    case Method::Oracle: {
      const std::set<NodeSet> truth(removed.begin(), removed.end());
      for (std::size_t i = 0; i < pool.size(); ++i) scores[i] = truth.count(pool[i]) ? 1.0 : 0.0;
      break;
    }
  }
  return scores;
}

std::vector<NodeSet> top_r(const std::vector<NodeSet>& pool, const std::vector<double>& scores, std::size_t r) {
  std::vector<std::size_t> idx(pool.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return pool[a] < pool[b];
  });
  std::vector<NodeSet> out;
  for (std::size_t i = 0; i < std::min(r, idx.size()); ++i) out.push_back(pool[idx[i]]);
  return out;
}

ExperimentReport run_experiment(const Hypergraph& h, const ExperimentConfig& cfg) {
  cfg.split.validate();
  if (cfg.methods.empty()) throw Error(ErrorCode::Config, "no methods to evaluate");
  ExperimentReport report;
  report.subject = cfg.subject;
  report.seed = cfg.split.seed;
  for (Method m : cfg.methods) report.methods.push_back({m, {}, 0.0, 0.0});

  for (std::size_t run = 0; run < cfg.split.runs; ++run) {
    const Split sp = split(h, cfg.split, run);
    const auto negatives_wanted = static_cast<std::size_t>(
        std::ceil(cfg.split.negative_multiplier * static_cast<double>(sp.train.num_edges())));
    const std::uint64_t run_seed = make_rng(cfg.split.seed, 4, run)();
    auto pool = negative_sample(sp.train, negatives_wanted, run_seed, &h);
    RunRecord rec;
    rec.run_index = run;
    rec.removed = sp.removed.size();
    rec.negatives = pool.size();
    pool.insert(pool.end(), sp.removed.begin(), sp.removed.end());
    std::sort(pool.begin(), pool.end());

    std::vector<double> f1s;
    for (auto& summary : report.methods) {
      bool degenerate = false;
      const auto scores = score_pool(summary.method, sp.train, pool, sp.removed, cfg, run_seed, &degenerate);
      if (summary.method == Method::Spectral) rec.spectral_degenerate = degenerate;
      const double value = avg_f1(top_r(pool, scores, sp.removed.size()), sp.removed);
      summary.avg_f1.push_back(value);
      f1s.push_back(value);
    }

    std::optional<double> subject_f1, best;
    for (std::size_t i = 0; i < report.methods.size(); ++i) {
      const Method m = report.methods[i].method;
      if (m == cfg.subject) {
        subject_f1 = f1s[i];
      } else if (m != Method::Oracle && (!best || f1s[i] > *best)) {
        best = f1s[i];
        rec.best_baseline = m;
      }
    }
    if (subject_f1 && best && *best > 0.0) rec.pi = (*subject_f1 - *best) / *best * 100.0;
    report.runs.push_back(rec);
  }

  for (auto& s : report.methods) {
    const double n = static_cast<double>(s.avg_f1.size());
    s.mean = std::accumulate(s.avg_f1.begin(), s.avg_f1.end(), 0.0) / n;
    double var = 0.0;
    for (double v : s.avg_f1) var += (v - s.mean) * (v - s.mean);
    s.stddev = n > 1 ? std::sqrt(var / (n - 1)) : 0.0;
  }
  double pi_sum = 0.0;
  std::size_t pi_count = 0;
  for (const auto& r : report.runs)
    if (r.pi) {
      pi_sum += *r.pi;
      ++pi_count;
    }
  if (pi_count) report.pi_mean = pi_sum / static_cast<double>(pi_count);
  return report;
}

Hypergraph planted_blocks(std::size_t n, std::size_t k, std::size_t edges, std::uint64_t seed,
                          std::size_t blocks, double p_inside) {
  if (blocks == 0 || n / blocks < k) throw Error(ErrorCode::InvalidArgument, "blocks too small for k");
  if (edges > binomial(n, k)) throw Error(ErrorCode::InvalidArgument, "more edges than k-subsets");
  auto rng = make_rng(seed, 5, 0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t block_size = n / blocks;
  std::set<NodeSet> chosen;
  std::vector<NodeSet> out;
  for (std::size_t attempt = 0; out.size() < edges; ++attempt) {
    if (attempt > 1000 * edges) throw Error(ErrorCode::SamplingExhausted, "cannot place planted edges");
    std::vector<NodeId> pool;
    if (unit(rng) < p_inside) {
      const std::size_t b = uniform_index(rng, blocks);
      for (std::size_t i = 0; i < block_size; ++i) pool.push_back(static_cast<NodeId>(b * block_size + i));
    } else {
      for (std::size_t i = 0; i < n; ++i) pool.push_back(static_cast<NodeId>(i));
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    NodeSet e(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(e.begin(), e.end());
    if (chosen.insert(e).second) out.push_back(std::move(e));
  }
  return Hypergraph(n, k, std::move(out));
}

ExperimentFile parse_experiment_file(std::istream& in) {
  ExperimentFile f;
  std::string line;
  std::size_t lineno = 0;
  auto to_size = [&](const std::string& v) {
    try {
      std::size_t pos = 0;
      const long long x = std::stoll(v, &pos);
      if (pos != v.size() || x < 0) throw std::invalid_argument(v);
      return static_cast<std::size_t>(x);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Config, "line " + std::to_string(lineno) + ": expected an integer, got '" + v + "'");
    }
  };
  auto to_double = [&](const std::string& v) {
    try {
      std::size_t pos = 0;
      const double x = std::stod(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
      return x;
    } catch (const std::exception&) {
      throw Error(ErrorCode::Config, "line " + std::to_string(lineno) + ": expected a number, got '" + v + "'");
    }
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::Config, "line " + std::to_string(lineno) + ": missing '='");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    auto& c = f.config;
    if (key == "dataset") {
      f.dataset = value;
    } else if (key == "output") {
      f.output = value;
    } else if (key == "k") {
      f.k = to_size(value);
    } else if (key == "fraction") {
      c.split.fraction = to_double(value);
    } else if (key == "multiplier") {
      c.split.negative_multiplier = to_double(value);
    } else if (key == "runs") {
      c.split.runs = to_size(value);
    } else if (key == "seed") {
      c.split.seed = to_size(value);
      c.solver.seed = c.split.seed;
    } else if (key == "methods") {
      c.methods.clear();
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) c.methods.push_back(parse_method(trim(item)));
    } else if (key == "subject") {
      c.subject = parse_method(value);
    } else if (key == "mode") {
      c.mode = parse_laplacian_mode(value);
    } else if (key == "aggregation") {
      c.scoring.aggregation = parse_aggregation(value);
    } else if (key == "restarts") {
      c.solver.restarts = to_size(value);
    } else if (key == "tol") {
      c.solver.residual_tol = to_double(value);
    } else if (key == "max_iters") {
      c.solver.max_iters = to_size(value);
    } else if (key == "saddle_modes") {
      c.solver.saddle_modes = to_size(value);
    } else if (key == "threads") {
      c.solver.threads = to_size(value);
    } else {
      throw Error(ErrorCode::Config, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (f.dataset.empty()) throw Error(ErrorCode::Config, "missing 'dataset'");
  f.config.split.validate();
  f.config.solver.validate();
  return f;
}

ExperimentFile load_experiment_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Config, "cannot open '" + path + "'");
  return parse_experiment_file(in);
}

}  // namespace hypred::eval
