#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypred/baselines.hpp"
#include "hypred/eval_harness.hpp"
#include "hypred/predictor.hpp"

namespace hypred::report {

enum class Format { Tsv, Json };
Format parse_format(std::string_view text);

/// Fixed 6 significant digits, used in every table.
std::string sig6(double v);

nlohmann::ordered_json to_json(const EigenPair& p, const NodeLabels& labels);
nlohmann::ordered_json to_json(const Ranking& r, const NodeLabels& labels, std::optional<std::size_t> top);
nlohmann::ordered_json to_json(const eval::ExperimentReport& r);

/// Eigenpairs: kind, lambda, residual, then one column per node.
void write_eigenpairs(std::ostream& out, const EigenSearch& search, const std::vector<EigenPair>& fiedler,
                      const NodeLabels& labels, Format fmt);

/// One block per ranking: rank, nodes, cost per eigenvector, aggregate.
void write_rankings(std::ostream& out, const std::vector<Ranking>& rankings, const NodeLabels& labels,
                    std::optional<std::size_t> top, Format fmt);

/// method, rank, nodes, score; descending score, ties lexicographic.
void write_baseline_scores(std::ostream& out, std::vector<baselines::BaselineScore> scores,
                           const NodeLabels& labels, std::optional<std::size_t> top, Format fmt);

void write_node_sets(std::ostream& out, const std::vector<NodeSet>& sets, const NodeLabels& labels, Format fmt);

/// Per-method mean and standard deviation, then per-run F1 and PI.
void write_experiment_table(std::ostream& out, const eval::ExperimentReport& r);

}  // namespace hypred::report
