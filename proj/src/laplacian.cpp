#include "hypred/laplacian.hpp"

#include <cmath>

namespace hypred {
namespace {

double ipow(double base, std::size_t exp) {
  double r = 1.0;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

std::string_view to_string(LaplacianMode mode) noexcept {
  return mode == LaplacianMode::Normalized ? "normalized" : "unnormalized";
}

LaplacianMode parse_laplacian_mode(std::string_view text) {
  if (text == "unnormalized") return LaplacianMode::Unnormalized;
  if (text == "normalized") return LaplacianMode::Normalized;
  throw Error(ErrorCode::InvalidArgument, "unknown Laplacian mode '" + std::string(text) + "'");
}

LaplacianOperator::LaplacianOperator(Hypergraph h, LaplacianMode mode)
    : h_(std::move(h)), mode_(mode), d_(hypred::degrees(h_)) {
  const std::size_t k = h_.order();
  diag_.assign(h_.num_nodes(), 1.0);
  if (mode_ == LaplacianMode::Unnormalized) diag_ = d_;
  edge_scale_.resize(h_.num_edges());
  for (std::size_t e = 0; e < h_.num_edges(); ++e) {
    double s = h_.weight(e);
    if (mode_ == LaplacianMode::Normalized)
      for (NodeId v : h_.edge(e)) {
        if (!(d_[v] > 0.0)) throw Error(ErrorCode::ZeroDegree, "node in an edge has zero degree");
        s *= std::pow(d_[v], -1.0 / static_cast<double>(k));
      }
    edge_scale_[e] = s;
  }
}

void LaplacianOperator::check_size(const Vector& x) const {
  if (static_cast<std::size_t>(x.size()) != h_.num_nodes())
    throw Error(ErrorCode::InvalidArgument, "vector length differs from node count");
}

double LaplacianOperator::edge_cost(std::size_t e, const Vector& x) const {
  check_size(x);
  const auto& nodes = h_.edge(e);
  if (mode_ == LaplacianMode::Normalized)
    return normalized_amgm_cost(nodes, x, d_, h_.weight(e));
  return amgm_cost(nodes, x, h_.weight(e));
}

double LaplacianOperator::cost_total(const Vector& x, std::vector<double>* breakdown) const {
  check_size(x);
  double total = 0.0;
  for (std::size_t e = 0; e < h_.num_edges(); ++e) {
    double c = edge_cost(e, x);
    if (breakdown) breakdown->push_back(c);
    total += c;
  }
  if (mode_ == LaplacianMode::Normalized) {
    const std::size_t k = order();
    for (std::size_t i = 0; i < d_.size(); ++i)
      if (d_[i] == 0.0) total += ipow(x[static_cast<Eigen::Index>(i)], k);
  }
  return total;
}

Vector LaplacianOperator::apply(const Vector& x) const {
  check_size(x);
  const std::size_t k = order();
  Vector y(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i)
    y[i] = diag_[static_cast<std::size_t>(i)] * ipow(x[i], k - 1);
  for (std::size_t e = 0; e < h_.num_edges(); ++e) {
    const auto& nodes = h_.edge(e);
    for (std::size_t a = 0; a < k; ++a) {
      double p = edge_scale_[e];
      for (std::size_t b = 0; b < k; ++b)
        if (b != a) p *= x[nodes[b]];
      y[nodes[a]] -= p;
    }
  }
  return y;
}

Matrix LaplacianOperator::jacobian(const Vector& x) const {
  check_size(x);
  const std::size_t k = order();
  const auto n = x.size();
  Matrix J = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    J(i, i) = static_cast<double>(k - 1) * diag_[static_cast<std::size_t>(i)] * ipow(x[i], k - 2);
  for (std::size_t e = 0; e < h_.num_edges(); ++e) {
    const auto& nodes = h_.edge(e);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b) {
        double p = edge_scale_[e];
        for (std::size_t c = 0; c < k; ++c)
          if (c != a && c != b) p *= x[nodes[c]];
        J(nodes[a], nodes[b]) -= p;
        J(nodes[b], nodes[a]) -= p;
      }
  }
  return J;
}

double amgm_cost(std::span<const NodeId> nodes, const Vector& x, double w) {
  const std::size_t k = nodes.size();
  double sum = 0.0, prod = 1.0;
  for (NodeId v : nodes) {
    sum += ipow(x[v], k);
    prod *= x[v];
  }
  return w * (sum - static_cast<double>(k) * prod);
}

double normalized_amgm_cost(std::span<const NodeId> nodes, const Vector& x,
                            std::span<const double> degrees, double w) {
  const std::size_t k = nodes.size();
  double sum = 0.0, prod = 1.0;
  for (NodeId v : nodes) {
    const double d = degrees[v];
    if (!(d > 0.0)) throw Error(ErrorCode::ZeroDegree, "node " + std::to_string(v) + " has zero degree");
    sum += ipow(x[v], k) / d;
    prod *= x[v] * std::pow(d, -1.0 / static_cast<double>(k));
  }
  return w * (sum - static_cast<double>(k) * prod);
}

}  // namespace hypred
