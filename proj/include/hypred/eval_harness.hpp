#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hypred/predictor.hpp"

namespace hypred::eval {

struct SplitSpec {
  double fraction = 0.10;
  double negative_multiplier = 3.0;  // negatives = multiplier * |train edges|
  std::uint64_t seed = 1;
  std::size_t runs = 20;

  void validate() const;
};

struct Split {
  Hypergraph train;  // keeps every node of the input
  std::vector<NodeSet> removed;
};

/// Deterministic in (spec.seed, run_index). Throws TooFewEdges when
/// floor(fraction * |E|) < 1.
Split split(const Hypergraph& h, const SplitSpec& spec, std::size_t run_index);

/**
 * Negative hyperedges grown on the clique expansion of `train`: a random
 * reduced-graph edge is extended through random neighbors of random members
 * until it has k nodes. Rejects train edges, repeats and, when given, edges
 * of `original`. Throws SamplingExhausted after 1000 * count attempts.
 */
std::vector<NodeSet> negative_sample(const Hypergraph& train, std::size_t count, std::uint64_t seed,
                                     const Hypergraph* original = nullptr);

/// 2|A ∩ B| / (|A| + |B|) for sorted node sets.
double f1(const NodeSet& a, const NodeSet& b);

/// Symmetric best-match average F1. Throws EmptyInput.
double avg_f1(const std::vector<NodeSet>& predicted, const std::vector<NodeSet>& truth);

enum class Method { CommonNeighbors, Katz, Hpra, Spectral, Random, Oracle };
std::string_view to_string(Method m) noexcept;
Method parse_method(std::string_view text);

struct ExperimentConfig {
  SplitSpec split;
  std::vector<Method> methods{Method::CommonNeighbors, Method::Katz, Method::Hpra, Method::Spectral};
  Method subject = Method::Spectral;  // PI is reported for this method
  LaplacianMode mode = LaplacianMode::Unnormalized;
  SolverConfig solver;
  ScoringOptions scoring{Aggregation::Min, CandidateCost::AmGm};
};

struct MethodSummary {
  Method method;
  std::vector<double> avg_f1;  // per run
  double mean = 0.0;
  double stddev = 0.0;
};

struct RunRecord {
  std::size_t run_index = 0;
  std::size_t removed = 0;
  std::size_t negatives = 0;
  std::optional<double> pi;  // absent when the best baseline scored 0
  std::optional<Method> best_baseline;
  bool spectral_degenerate = false;
};

struct ExperimentReport {
  Method subject = Method::Spectral;
  std::vector<MethodSummary> methods;
  std::vector<RunRecord> runs;
  std::optional<double> pi_mean;
  std::uint64_t seed = 0;
};

/// Scores every pool member; higher means more likely. Exposed for tests.
std::vector<double> score_pool(Method m, const Hypergraph& train, const std::vector<NodeSet>& pool,
                               const std::vector<NodeSet>& removed, const ExperimentConfig& cfg,
                               std::uint64_t run_seed, bool* degenerate = nullptr);

/// Top-r pool members by score; ties broken lexicographically.
std::vector<NodeSet> top_r(const std::vector<NodeSet>& pool, const std::vector<double>& scores, std::size_t r);

ExperimentReport run_experiment(const Hypergraph& h, const ExperimentConfig& cfg);

/// k-uniform hypergraph on n nodes split into `blocks` equal groups; edges
/// stay inside one block with probability `p_inside`, otherwise span blocks.
Hypergraph planted_blocks(std::size_t n, std::size_t k, std::size_t edges, std::uint64_t seed,
                          std::size_t blocks = 2, double p_inside = 0.9);

/// Experiment file: "key = value" lines, '#' comments.
struct ExperimentFile {
  std::string dataset;
  std::optional<std::size_t> k;
  std::string output;  // report path prefix
  ExperimentConfig config;
};

ExperimentFile parse_experiment_file(std::istream& in);
ExperimentFile load_experiment_file(const std::string& path);

}  // namespace hypred::eval
