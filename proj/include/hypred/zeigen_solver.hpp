#pragma once

#include <cstdint>
#include <vector>

#include "hypred/laplacian.hpp"

namespace hypred {

enum class EigenKind { Zero, Positive };

/// Certified Z-eigenpair: L x^{k-1} = lambda x with ||x|| = 1.
struct EigenPair {
  double lambda = 0.0;
  Vector vector;
  double residual = 0.0;  // ||L x^{k-1} - lambda x||_2
  EigenKind kind = EigenKind::Zero;
};

struct SolverConfig {
  std::size_t restarts = 64;       // seeded random starts / climb directions
  std::size_t max_iters = 5000;    // per local run
  double residual_tol = 1e-9;
  double zero_threshold = 1e-6;
  double dedup_angle_cos = 0.9999;
  double dedup_lambda_tol = 1e-6;
  std::uint64_t seed = 1;

  // Shifted power iteration: initial shift, doubled until the step is monotone.
  double shift_initial = 1.0;
  // Projected gradient: initial step, Armijo constant.
  double step_initial = 0.5;
  double armijo_c = 1e-4;
  // Saddle search: trust radius, number of lowest Hessian modes climbed (x2 signs).
  double trust_radius = 0.1;
  std::size_t saddle_modes = 16;
  std::size_t saddle_iters = 400;
  std::size_t newton_iters = 60;

  std::size_t threads = 1;

  /// Throws InvalidArgument on nonpositive tolerances or zero restarts.
  void validate() const;
};

struct EigenSearch {
  std::vector<EigenPair> pairs;  // sorted by (lambda, vector)
  bool converged = true;         // false when no start met residual_tol
  std::size_t starts = 0;
};

/// Checks a candidate independently: normalizes x, recomputes lambda as
/// L x^k and the residual. Returns nullopt if the residual exceeds `tol`.
std::optional<EigenPair> certify(const LaplacianOperator& op, Vector x, double tol,
                                 double zero_threshold);

/**
 * Multi-start search for Z-eigenpairs.
 *
 * Minima and maxima of L x^k on the sphere come from shifted power iteration
 * and projected gradient descent; index-one saddles (where Fiedler vectors of
 * odd-order hypergraphs live) come from eigenvector-following started at
 * every certified minimum. Every endpoint is refined by Newton's method on
 * the KKT system and certified by residual. No completeness is claimed.
 *
 * Odd k: pairs with lambda < -zero_threshold become (-lambda, -x). Otherwise
 * the largest-magnitude entry is made positive.
 */
EigenSearch find_eigenpairs(const LaplacianOperator& op, const SolverConfig& cfg);

/// Pairs attaining the minimum positive lambda (within dedup_lambda_tol),
/// ordered lexicographically. Throws NoPositiveEigenpair.
std::vector<EigenPair> fiedler(const LaplacianOperator& op, const SolverConfig& cfg);
std::vector<EigenPair> fiedler_from(const EigenSearch& search, const SolverConfig& cfg);

struct ZeroReport {
  std::size_t count = 0;
  std::vector<Vector> vectors;
};

/// Deduplicated zero-eigenvalue vectors found; diagnostic only.
ZeroReport zero_multiplicity_report(const LaplacianOperator& op, const SolverConfig& cfg);

}  // namespace hypred
