#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hypred/hypergraph.hpp"

namespace hypred {

enum class LaplacianMode { Unnormalized, Normalized };

std::string_view to_string(LaplacianMode mode) noexcept;
LaplacianMode parse_laplacian_mode(std::string_view text);

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/**
 * Sparse functional form of the order-k Laplacian tensor of a k-uniform
 * hypergraph, or its degree-normalized variant.
 *
 * Never materializes the n^k entries. Each edge e contributes
 *   l_e(x) = w_e * (sum_{i in e} x_i^k - k * prod_{i in e} x_i)
 * to L x^k (unnormalized), or
 *   w_e * (sum_{i in e} x_i^k / d_i - k * prod_{i in e} x_i d_i^{-1/k})
 * in normalized mode, where isolated nodes add x_i^k on their own.
 * All evaluations are O(|E| k) and use ordered sequential summation.
 */
class LaplacianOperator {
 public:
  LaplacianOperator(Hypergraph h, LaplacianMode mode);

  const Hypergraph& hypergraph() const noexcept { return h_; }
  LaplacianMode mode() const noexcept { return mode_; }
  std::size_t order() const noexcept { return h_.order(); }
  std::size_t dimension() const noexcept { return h_.num_nodes(); }
  const std::vector<double>& degrees() const noexcept { return d_; }

  double edge_cost(std::size_t e, const Vector& x) const;

  /// L x^k; per-edge terms appended to `breakdown` when given. Isolated-node
  /// terms of normalized mode are not part of the breakdown.
  double cost_total(const Vector& x, std::vector<double>* breakdown = nullptr) const;

  /// The vector L x^{k-1}.
  Vector apply(const Vector& x) const;

  /// Gradient of x -> L x^k, i.e. k * L x^{k-1}.
  Vector gradient(const Vector& x) const { return static_cast<double>(order()) * apply(x); }

  /// Jacobian of x -> L x^{k-1}; symmetric, equals (k-1) L x^{k-2}.
  Matrix jacobian(const Vector& x) const;

 private:
  void check_size(const Vector& x) const;

  Hypergraph h_;
  LaplacianMode mode_;
  std::vector<double> d_;
  std::vector<double> diag_;       // coefficient of x_i^k in L x^k
  std::vector<double> edge_scale_; // w_e, times prod d^{-1/k} when normalized
};

/// AM-GM cost of a single set of nodes with weight w (no hypergraph needed).
double amgm_cost(std::span<const NodeId> nodes, const Vector& x, double w = 1.0);

/// Degree-normalized cost of a set of nodes; throws ZeroDegree if any d_i == 0.
double normalized_amgm_cost(std::span<const NodeId> nodes, const Vector& x,
                            std::span<const double> degrees, double w = 1.0);

}  // namespace hypred
