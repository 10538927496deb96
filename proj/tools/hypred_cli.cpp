// hypred: command-line front end for spectral hyperedge prediction.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "hypred/baselines.hpp"
#include "hypred/dense_oracle.hpp"
#include "hypred/eval_harness.hpp"
#include "hypred/predictor.hpp"
#include "hypred/report.hpp"

using namespace hypred;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitSolver = 2;

struct Options {
  std::string input;
  std::optional<std::size_t> k;
  std::string mode = "unnormalized";
  std::string format = "tsv";
  bool verify = false;
  SolverConfig solver;

  // predict
  std::optional<std::size_t> top;
  std::string given;
  std::string holdout;
  std::string aggregation = "per_vector";
  std::string cost = "amgm";
  std::string method = "spectral";

  // sample-negatives
  std::optional<std::size_t> count;

  // experiment
  std::string config;
  std::string output;

  // planted
  std::size_t n = 20, edges = 60, blocks = 2;
  double p_inside = 0.9;
};

void add_input(CLI::App* cmd, Options& o) {
  cmd->add_option("-i,--input", o.input, "hyperedge-list file")->required();
  cmd->add_option("-k,--order", o.k, "expected edge cardinality");
}

void add_solver(CLI::App* cmd, Options& o) {
  auto& s = o.solver;
  cmd->add_option("--mode", o.mode, "unnormalized|normalized")->capture_default_str();
  cmd->add_option("--restarts", s.restarts)->capture_default_str();
  cmd->add_option("--max-iters", s.max_iters)->capture_default_str();
  cmd->add_option("--tol", s.residual_tol, "residual tolerance")->capture_default_str();
  cmd->add_option("--zero-threshold", s.zero_threshold)->capture_default_str();
  cmd->add_option("--dedup-cos", s.dedup_angle_cos)->capture_default_str();
  cmd->add_option("--dedup-lambda", s.dedup_lambda_tol)->capture_default_str();
  cmd->add_option("--seed", s.seed)->capture_default_str();
  cmd->add_option("--shift", s.shift_initial, "initial power-iteration shift")->capture_default_str();
  cmd->add_option("--step", s.step_initial, "initial gradient step")->capture_default_str();
  cmd->add_option("--armijo", s.armijo_c)->capture_default_str();
  cmd->add_option("--trust-radius", s.trust_radius)->capture_default_str();
  cmd->add_option("--saddle-modes", s.saddle_modes)->capture_default_str();
  cmd->add_option("--saddle-iters", s.saddle_iters)->capture_default_str();
  cmd->add_option("--newton-iters", s.newton_iters)->capture_default_str();
  cmd->add_option("--threads", s.threads)->capture_default_str();
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "tsv|json")->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();
}

NodeSet parse_node_list(const std::string& text, const NodeLabels& labels) {
  NodeSet out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    const auto id = labels.find(tok);
    if (!id) throw Error(ErrorCode::InvalidArgument, "unknown node '" + tok + "'");
    out.push_back(*id);
  }
  return out;
}

// Cross-checks the sparse operator against the dense tensor at each vector.
bool verify_against_dense(const LaplacianOperator& op, const std::vector<Vector>& xs) {
  const auto t = dense::build_dense_laplacian(op.hypergraph(), op.mode());
  double cost_err = 0.0, apply_err = 0.0;
  for (const auto& x : xs) {
    const double dc = dense::dense_cost(t, x);
    const Vector da = dense::dense_apply(t, x);
    cost_err = std::max(cost_err, std::abs(op.cost_total(x) - dc) / std::max(1.0, std::abs(dc)));
    apply_err = std::max(apply_err, (op.apply(x) - da).lpNorm<Eigen::Infinity>() /
                                        std::max(1.0, da.lpNorm<Eigen::Infinity>()));
  }
  const bool ok = cost_err <= 1e-10 && apply_err <= 1e-10;
  std::cerr << "verify: " << (ok ? "ok" : "MISMATCH") << " vectors=" << xs.size()
            << " max_rel_cost_err=" << report::sig6(cost_err) << " max_rel_apply_err=" << report::sig6(apply_err)
            << '\n';
  return ok;
}

std::vector<Vector> vectors_of(const std::vector<EigenPair>& pairs) {
  std::vector<Vector> out;
  for (const auto& p : pairs) out.push_back(p.vector);
  return out;
}

int cmd_eigen(const Options& o) {
  const auto lh = load_hypergraph(o.input, o.k);
  const LaplacianOperator op(lh.graph, parse_laplacian_mode(o.mode));
  const auto search = find_eigenpairs(op, o.solver);
  if (!search.converged) std::cerr << "warning: no start met the residual tolerance\n";
  std::vector<EigenPair> f;
  int status = 0;
  try {
    f = fiedler_from(search, o.solver);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoPositiveEigenpair) throw;
    std::cerr << e.what() << '\n';
    status = kExitSolver;
  }
  report::write_eigenpairs(std::cout, search, f, lh.labels, report::parse_format(o.format));
  if (o.verify && !verify_against_dense(op, vectors_of(search.pairs))) status = kExitSolver;
  return status;
}

std::vector<baselines::BaselineScore> baseline_scores(const std::string& method, const Hypergraph& h,
                                                      const std::vector<NodeSet>& candidates) {
  std::vector<baselines::BaselineScore> out;
  if (method == "katz") {
    const auto g = clique_expand(h);
    return baselines::katz_scores(g, baselines::default_katz_beta(g), candidates);
  }
  if (method == "cn") {
    const auto g = clique_expand(h);
    for (const auto& c : candidates) out.push_back({c, "cn", baselines::cn_score(g, c)});
    return out;
  }
  const baselines::ResourceAllocation ra(h);
  for (const auto& c : candidates) out.push_back({c, "hpra", ra.score(c)});
  return out;
}

int cmd_predict(const Options& o) {
  const auto lh = load_hypergraph(o.input, o.k);
  const auto mode = parse_laplacian_mode(o.mode);
  const auto fmt = report::parse_format(o.format);
  ScoringOptions opts;
  opts.aggregation = parse_aggregation(o.aggregation);
  if (o.cost == "normalized") opts.cost = CandidateCost::DegreeNormalized;
  if (!o.given.empty() && !o.holdout.empty())
    throw Error(ErrorCode::InvalidArgument, "--given and --holdout are exclusive");

  if (o.method != "spectral") {
    const auto candidates = o.given.empty() ? enumerate_candidates(lh.graph).members
                                            : completion_candidates(lh.graph, parse_node_list(o.given, lh.labels));
    report::write_baseline_scores(std::cout, baseline_scores(o.method, lh.graph, candidates), lh.labels, o.top,
                                  fmt);
    return 0;
  }

  if (!o.holdout.empty()) {
    NodeSet held = parse_node_list(o.holdout, lh.labels);
    std::sort(held.begin(), held.end());
    const auto po = preferential_order(lh.graph, held, mode, o.solver, opts);
    if (fmt == report::Format::Json) {
      nlohmann::ordered_json j;
      j["held_out"] = lh.labels.format(held);
      j["rank"] = po.rank;
      j["ranks"] = po.ranks;
      j["candidates"] = po.candidate_count;
      j["fiedler_value"] = po.fiedler_value;
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (const auto& rk : po.rankings) r.push_back(report::to_json(rk, lh.labels, o.top));
      j["rankings"] = std::move(r);
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "# held_out " << lh.labels.format(held) << " rank " << po.rank << " of " << po.candidate_count
                << " (fiedler " << report::sig6(po.fiedler_value) << ")\n";
      report::write_rankings(std::cout, po.rankings, lh.labels, o.top, fmt);
    }
    return 0;
  }

  std::vector<Ranking> rankings;
  std::vector<EigenPair> pairs;
  if (!o.given.empty()) {
    auto c = complete_hyperedge(lh.graph, parse_node_list(o.given, lh.labels), mode, o.solver, opts);
    rankings = std::move(c.rankings);
    pairs = std::move(c.fiedler_pairs);
  } else {
    const LaplacianOperator op(lh.graph, mode);
    pairs = fiedler(op, o.solver);
    rankings = score_candidates(lh.graph, enumerate_candidates(lh.graph).members, vectors_of(pairs), opts);
  }
  if (fmt == report::Format::Tsv)
    std::cout << "# fiedler " << report::sig6(pairs.front().lambda) << " vectors " << pairs.size() << '\n';
  report::write_rankings(std::cout, rankings, lh.labels, o.top, fmt);
  if (o.verify && !verify_against_dense(LaplacianOperator(lh.graph, mode), vectors_of(pairs))) return kExitSolver;
  return 0;
}

int cmd_sample(const Options& o) {
  const auto lh = load_hypergraph(o.input, o.k);
  const std::size_t count = o.count.value_or(3 * lh.graph.num_edges());
  const auto neg = eval::negative_sample(lh.graph, count, o.solver.seed);
  report::write_node_sets(std::cout, neg, lh.labels, report::parse_format(o.format));
  return 0;
}

int cmd_experiment(const Options& o) {
  auto file = eval::load_experiment_file(o.config);
  if (!o.output.empty()) file.output = o.output;
  std::filesystem::path dataset = file.dataset;
  if (dataset.is_relative()) dataset = std::filesystem::path(o.config).parent_path() / dataset;
  if (!std::filesystem::exists(dataset))
    throw Error(ErrorCode::Config, "dataset '" + dataset.string() + "' does not exist");
  const auto lh = load_hypergraph(dataset.string(), file.k);
  const auto rep = eval::run_experiment(lh.graph, file.config);
  if (file.output.empty()) {
    report::write_experiment_table(std::cout, rep);
    return 0;
  }
  std::ofstream json(file.output + ".json"), table(file.output + ".tsv");
  if (!json || !table) throw Error(ErrorCode::Config, "cannot write '" + file.output + "'");
  json << report::to_json(rep).dump(2) << '\n';
  report::write_experiment_table(table, rep);
  report::write_experiment_table(std::cout, rep);
  return 0;
}

// Dense-oracle cross-check at random unit vectors and at the certified pairs.
int cmd_verify(const Options& o) {
  const auto lh = load_hypergraph(o.input, o.k);
  const LaplacianOperator op(lh.graph, parse_laplacian_mode(o.mode));
  std::mt19937_64 rng(o.solver.seed);
  std::normal_distribution<double> gauss;
  std::vector<Vector> xs;
  for (int i = 0; i < 8; ++i) {
    Vector x(static_cast<Eigen::Index>(op.dimension()));
    for (auto& v : x) v = gauss(rng);
    xs.push_back(x.normalized());
  }
  const auto search = find_eigenpairs(op, o.solver);
  for (const auto& p : search.pairs) xs.push_back(p.vector);
  const bool ok = verify_against_dense(op, xs);
  std::cout << (ok ? "ok" : "mismatch") << '\t' << xs.size() << " vectors\n";
  return ok ? 0 : kExitSolver;
}

int cmd_planted(const Options& o) {
  const auto h = eval::planted_blocks(o.n, o.k.value_or(3), o.edges, o.solver.seed, o.blocks, o.p_inside);
  write_hypergraph(std::cout, h);
  return 0;
}

int exit_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::NoConvergence:
    case ErrorCode::NoPositiveEigenpair:
      return kExitSolver;
    default:
      return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral hyperedge prediction for k-uniform hypergraphs"};
  app.require_subcommand(1);
  Options o;

  auto* eigen = app.add_subcommand("eigen", "certified Z-eigenpairs and the Fiedler set");
  add_input(eigen, o);
  add_solver(eigen, o);
  add_format(eigen, o);
  eigen->add_flag("--verify", o.verify, "cross-check against the dense tensor (small n only)");

  auto* predict = app.add_subcommand("predict", "rank candidate hyperedges");
  add_input(predict, o);
  add_solver(predict, o);
  add_format(predict, o);
  predict->add_flag("--verify", o.verify, "cross-check against the dense tensor (small n only)");
  predict->add_option("--top", o.top, "rows per ranking");
  predict->add_option("--given", o.given, "complete an edge containing these nodes, e.g. 7,8");
  predict->add_option("--holdout", o.holdout, "preferential order of this edge, e.g. 7,8,9");
  predict->add_option("--aggregation", o.aggregation, "per_vector|min|mean")->capture_default_str();
  predict->add_option("--cost", o.cost, "amgm|normalized")
      ->check(CLI::IsMember({"amgm", "normalized"}))
      ->capture_default_str();
  predict->add_option("--method", o.method, "spectral|cn|katz|hpra")
      ->check(CLI::IsMember({"spectral", "cn", "katz", "hpra"}))
      ->capture_default_str();

  auto* sample = app.add_subcommand("sample-negatives", "negative hyperedges by neighborhood growth");
  add_input(sample, o);
  add_format(sample, o);
  sample->add_option("--count", o.count, "default 3 x edges");
  sample->add_option("--seed", o.solver.seed)->capture_default_str();

  auto* experiment = app.add_subcommand("experiment", "split / score / average-F1 protocol");
  experiment->add_option("config", o.config, "key = value experiment file")->required();
  experiment->add_option("-o,--output", o.output, "report path prefix (writes .json and .tsv)");

  auto* verify = app.add_subcommand("verify", "dense-oracle cross-check");
  add_input(verify, o);
  add_solver(verify, o);

  auto* planted = app.add_subcommand("planted", "write a planted-block synthetic hypergraph");
  planted->add_option("--nodes", o.n)->capture_default_str();
  planted->add_option("-k,--order", o.k, "edge cardinality (3)");
  planted->add_option("--edges", o.edges)->capture_default_str();
  planted->add_option("--blocks", o.blocks)->capture_default_str();
  planted->add_option("--p-inside", o.p_inside)->capture_default_str();
  planted->add_option("--seed", o.solver.seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  try {
    o.solver.validate();
    if (*eigen) return cmd_eigen(o);
    if (*predict) return cmd_predict(o);
    if (*sample) return cmd_sample(o);
    if (*experiment) return cmd_experiment(o);
    if (*verify) return cmd_verify(o);
    if (*planted) return cmd_planted(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
