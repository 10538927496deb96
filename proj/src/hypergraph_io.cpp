#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "hypred/hypergraph.hpp"

namespace hypred {
namespace {

bool parse_integer(const std::string& s, long long& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string format_weight(double w) {
  std::ostringstream os;
  os.precision(17);
  os << w;
  return os.str();
}

struct RawEdge {
  std::vector<std::string> tokens;
  double weight;
  std::size_t line;
};

}  // namespace

LabeledHypergraph parse_hypergraph(std::istream& in, std::optional<std::size_t> k_expected) {
  std::vector<RawEdge> raw;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    std::string tok;
    RawEdge edge{{}, 1.0, lineno};
    bool have_weight = false;
    while (ls >> tok) {
      if (edge.tokens.empty() && !have_weight && tok[0] == '#') break;
      if (tok.rfind("w=", 0) == 0) {
        const std::string value = tok.substr(2);
        char* end = nullptr;
        double w = std::strtod(value.c_str(), &end);
        if (value.empty() || end != value.c_str() + value.size() || !std::isfinite(w) || w <= 0.0)
          throw Error(ErrorCode::BadWeight, "line " + std::to_string(lineno) + ": '" + tok + "'");
        edge.weight = w;
        have_weight = true;
        continue;
      }
      if (have_weight)
        throw Error(ErrorCode::BadWeight,
                    "line " + std::to_string(lineno) + ": weight must be the last token");
      edge.tokens.push_back(tok);
    }
    if (edge.tokens.empty()) {
      if (have_weight)
        throw Error(ErrorCode::BadWeight, "line " + std::to_string(lineno) + ": weight without nodes");
      continue;
    }
    raw.push_back(std::move(edge));
  }
  if (raw.empty()) throw Error(ErrorCode::EmptyInput, "no hyperedges in input");

  const std::size_t k = k_expected.value_or(raw.front().tokens.size());
  for (const auto& e : raw) {
    std::vector<std::string> sorted = e.tokens;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorCode::RepeatedNode, "line " + std::to_string(e.line));
    if (e.tokens.size() != k)
      throw Error(ErrorCode::NonUniform, "line " + std::to_string(e.line) + " has " +
                                             std::to_string(e.tokens.size()) + " nodes, expected " +
                                             std::to_string(k));
  }

  // Dense ids: numeric order when every token is an integer, else first use.
  std::vector<std::string> order;
  {
    std::map<std::string, std::size_t> first_use;
    for (const auto& e : raw)
      for (const auto& t : e.tokens) first_use.emplace(t, first_use.size());
    order.resize(first_use.size());
    for (const auto& [t, idx] : first_use) order[idx] = t;
    bool all_int = std::all_of(order.begin(), order.end(), [](const std::string& t) {
      long long v;
      return parse_integer(t, v);
    });
    if (all_int)
      std::stable_sort(order.begin(), order.end(), [](const std::string& a, const std::string& b) {
        long long x, y;
        parse_integer(a, x);
        parse_integer(b, y);
        return x < y;
      });
  }
  std::map<std::string, NodeId> id;
  for (std::size_t i = 0; i < order.size(); ++i) id[order[i]] = static_cast<NodeId>(i);

  std::map<NodeSet, double> merged;
  std::vector<NodeSet> first_seen;
  for (const auto& e : raw) {
    NodeSet nodes;
    for (const auto& t : e.tokens) nodes.push_back(id.at(t));
    std::sort(nodes.begin(), nodes.end());
    auto [it, inserted] = merged.emplace(nodes, 0.0);
    if (inserted) first_seen.push_back(nodes);
    it->second += e.weight;
  }
  std::vector<double> weights;
  weights.reserve(first_seen.size());
  for (const auto& nodes : first_seen) weights.push_back(merged.at(nodes));
  return {Hypergraph(order.size(), k, std::move(first_seen), std::move(weights)),
          NodeLabels{std::move(order)}};
}

LabeledHypergraph parse_hypergraph_string(const std::string& text,
                                          std::optional<std::size_t> k_expected) {
  std::istringstream in(text);
  return parse_hypergraph(in, k_expected);
}

LabeledHypergraph load_hypergraph(const std::string& path, std::optional<std::size_t> k_expected) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  return parse_hypergraph(in, k_expected);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h, const NodeLabels* labels) {
  std::vector<std::size_t> idx(h.num_edges());
  for (std::size_t e = 0; e < idx.size(); ++e) idx[e] = e;
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return h.edge(a) < h.edge(b); });
  for (std::size_t e : idx) {
    const auto& nodes = h.edge(e);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (i) out << ' ';
      if (labels)
        out << (*labels)[nodes[i]];
      else
        out << nodes[i];
    }
    if (h.weight(e) != 1.0) out << " w=" << format_weight(h.weight(e));
    out << '\n';
  }
}

std::string to_string(const Hypergraph& h, const NodeLabels* labels) {
  std::ostringstream os;
  write_hypergraph(os, h, labels);
  return os.str();
}

}  // namespace hypred
