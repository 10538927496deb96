#include "hypred/zeigen_solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <random>
#include <thread>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace hypred {
namespace {

bool normalize(Vector& x) {
  const double nrm = x.norm();
  if (!(nrm > 0.0) || !std::isfinite(nrm)) return false;
  x /= nrm;
  return true;
}

// Orthonormal basis of the tangent space of the sphere at unit x (n x n-1).
Matrix tangent_basis(const Vector& x) {
  const auto n = x.size();
  const Matrix column = x;
  Eigen::HouseholderQR<Matrix> qr(column);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  return q.rightCols(n - 1);
}

struct TangentModel {
  Vector grad;    // tangent coordinates of the Riemannian gradient of L x^k
  Vector curv;    // Riemannian Hessian eigenvalues, ascending
  Matrix modes;   // ambient eigenvectors (n x n-1)
};

TangentModel tangent_model(const LaplacianOperator& op, const Vector& x) {
  const double k = static_cast<double>(op.order());
  const Vector ax = op.apply(x);
  const double lambda = x.dot(ax);
  const Matrix basis = tangent_basis(x);
  Matrix hess = op.jacobian(x);
  hess.diagonal().array() -= lambda;
  hess *= k;
  const Matrix ht = basis.transpose() * hess * basis;
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (ht + ht.transpose()));
  TangentModel m;
  m.curv = es.eigenvalues();
  m.modes = basis * es.eigenvectors();
  m.grad = es.eigenvectors().transpose() * (basis.transpose() * (k * (ax - lambda * x)));
  return m;
}

// Smallest root of mu = sum g_i^2 / (mu - b_i) below min(b, 0).
double rfo_shift(const Vector& b, const Vector& g, Eigen::Index skip) {
  double bmin = 0.0;
  for (Eigen::Index i = 0; i < b.size(); ++i)
    if (i != skip) bmin = std::min(bmin, b[i]);
  auto f = [&](double mu) {
    double s = mu;
    for (Eigen::Index i = 0; i < b.size(); ++i)
      if (i != skip) s -= g[i] * g[i] / (mu - b[i]);
    return s;
  };
  double hi = bmin - 1e-14 * (1.0 + std::abs(bmin));
  double lo = bmin - 1.0 - g.norm();
  while (f(lo) > 0.0) lo = bmin - 2.0 * (bmin - lo);
  if (f(hi) <= 0.0) return hi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? hi : lo) = mid;
  }
  return lo;
}

// --- local routes ---------------------------------------------------------

// Shifted power iteration: x <- normalize(+-(A x^{k-1}) + alpha x), with alpha
// doubled whenever a step fails to move L x^k in the requested direction.
Vector shifted_power(const LaplacianOperator& op, Vector x, bool ascend, const SolverConfig& cfg) {
  double alpha = cfg.shift_initial;
  double f = op.cost_total(x);
  const double sgn = ascend ? 1.0 : -1.0;
  for (std::size_t it = 0; it < cfg.max_iters; ++it) {
    const Vector ax = op.apply(x);
    if ((ax - x.dot(ax) * x).norm() <= 1e-7) break;
    Vector next;
    double fn = 0.0;
    bool moved = false;
    for (int tries = 0; tries < 60; ++tries) {
      next = sgn * ax + alpha * x;
      if (!normalize(next)) break;
      fn = op.cost_total(next);
      if (sgn * (fn - f) >= -1e-15 * (1.0 + std::abs(f))) {
        moved = true;
        break;
      }
      alpha *= 2.0;
    }
    if (!moved) break;
    const double change = (next - x).norm();
    x = std::move(next);
    f = fn;
    if (change < 1e-14) break;
  }
  return x;
}

// Projected gradient descent on the sphere with Armijo backtracking.
Vector projected_gradient(const LaplacianOperator& op, Vector x, const SolverConfig& cfg) {
  const double k = static_cast<double>(op.order());
  double f = op.cost_total(x);
  for (std::size_t it = 0; it < cfg.max_iters; ++it) {
    const Vector ax = op.apply(x);
    const Vector g = k * (ax - x.dot(ax) * x);
    const double gg = g.squaredNorm();
    if (std::sqrt(gg) <= 1e-7) break;
    double eta = cfg.step_initial;
    bool accepted = false;
    for (int tries = 0; tries < 60; ++tries, eta *= 0.5) {
      Vector trial = x - eta * g;
      if (!normalize(trial)) continue;
      const double ft = op.cost_total(trial);
      if (ft <= f - cfg.armijo_c * eta * gg) {
        x = std::move(trial);
        f = ft;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  return x;
}

// Eigenvector-following toward an index-one saddle: uphill along the tracked
// Hessian mode, downhill along the rest (partitioned rational-function steps).
Vector follow_mode(const LaplacianOperator& op, Vector x, Vector track, const SolverConfig& cfg) {
  for (std::size_t it = 0; it < cfg.saddle_iters; ++it) {
    const TangentModel m = tangent_model(op, x);
    if (m.grad.norm() <= 1e-9) break;
    Eigen::Index mode = 0;
    (m.modes.transpose() * track).cwiseAbs().maxCoeff(&mode);
    const double orient = m.modes.col(mode).dot(track) < 0 ? -1.0 : 1.0;
    track = orient * m.modes.col(mode);

    const double b = m.curv[mode], g = m.grad[mode];
    Vector step_t = Vector::Zero(m.curv.size());
    const double mu_up = 0.5 * b + 0.5 * std::sqrt(b * b + 4.0 * g * g);
    step_t[mode] = (mu_up - b > 1e-14) ? g / (mu_up - b) : orient * cfg.trust_radius;
    const double mu_down = rfo_shift(m.curv, m.grad, mode);
    for (Eigen::Index i = 0; i < m.curv.size(); ++i)
      if (i != mode) step_t[i] = -m.grad[i] / (m.curv[i] - mu_down);

    Vector step = m.modes * step_t;
    const double len = step.norm();
    if (len > cfg.trust_radius) step *= cfg.trust_radius / len;
    x += step;
    if (!normalize(x)) break;
  }
  return x;
}

// Newton's method on F(x, lambda) = [A x^{k-1} - lambda x; (x'x - 1)/2].
Vector newton_refine(const LaplacianOperator& op, Vector x, const SolverConfig& cfg) {
  const auto n = x.size();
  if (!normalize(x)) return x;
  double lambda = x.dot(op.apply(x));
  auto kkt_norm = [&](const Vector& v, double l) {
    const Vector r = op.apply(v) - l * v;
    const double c = 0.5 * (v.squaredNorm() - 1.0);
    return std::sqrt(r.squaredNorm() + c * c);
  };
  double fnorm = kkt_norm(x, lambda);
  for (std::size_t it = 0; it < cfg.newton_iters && fnorm > 1e-15; ++it) {
    Matrix jac(n + 1, n + 1);
    jac.topLeftCorner(n, n) = op.jacobian(x);
    jac.topLeftCorner(n, n).diagonal().array() -= lambda;
    jac.topRightCorner(n, 1) = -x;
    jac.bottomLeftCorner(1, n) = x.transpose();
    jac(n, n) = 0.0;
    Vector rhs(n + 1);
    rhs.head(n) = -(op.apply(x) - lambda * x);
    rhs[n] = -0.5 * (x.squaredNorm() - 1.0);
    const Vector delta = jac.completeOrthogonalDecomposition().solve(rhs);
    if (!delta.allFinite()) break;

    double t = 1.0;
    bool improved = false;
    for (int tries = 0; tries < 12; ++tries, t *= 0.5) {
      Vector xt = x + t * delta.head(n);
      const double lt = lambda + t * delta[n];
      if (!normalize(xt)) continue;
      const double ft = kkt_norm(xt, lt);
      if (ft < fnorm) {
        x = std::move(xt);
        lambda = x.dot(op.apply(x));
        fnorm = kkt_norm(x, lambda);
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return x;
}

// --- canonicalization and dedup --------------------------------------------

void canonicalize(EigenPair& p, std::size_t k, double zero_threshold) {
  if (k % 2 == 1 && p.lambda < -zero_threshold) {
    p.lambda = -p.lambda;
    p.vector = -p.vector;
  }
  p.kind = std::abs(p.lambda) <= zero_threshold ? EigenKind::Zero : EigenKind::Positive;
  if (k % 2 == 0 || p.kind == EigenKind::Zero) {
    Eigen::Index imax = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < p.vector.size(); ++i)
      if (std::abs(p.vector[i]) > best + 1e-12) {
        best = std::abs(p.vector[i]);
        imax = i;
      }
    if (p.vector.size() > 0 && p.vector[imax] < 0) p.vector = -p.vector;
  }
}

bool lex_less(const Vector& a, const Vector& b, double quantum) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const double qa = std::round(a[i] / quantum), qb = std::round(b[i] / quantum);
    if (qa != qb) return qa < qb;
  }
  return false;
}

std::vector<EigenPair> dedup(std::vector<EigenPair> pairs, const SolverConfig& cfg) {
  std::sort(pairs.begin(), pairs.end(), [](const EigenPair& a, const EigenPair& b) {
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    return lex_less(a.vector, b.vector, 1e-12);
  });
  std::vector<EigenPair> kept;
  for (auto& p : pairs) {
    bool dup = false;
    for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
      if (p.lambda - it->lambda > cfg.dedup_lambda_tol) break;
      if (std::abs(p.vector.dot(it->vector)) >= cfg.dedup_angle_cos) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(std::move(p));
  }
  return kept;
}

// Runs tasks [0, count) on up to `threads` workers; output order is by index.
template <class Result>
std::vector<Result> parallel_map(std::size_t count, std::size_t threads,
                                 const std::function<Result(std::size_t)>& fn) {
  std::vector<Result> out(count);
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

std::vector<Vector> seed_vectors(std::size_t n, const SolverConfig& cfg) {
  std::vector<Vector> seeds;
  for (std::size_t i = 0; i < n; ++i) seeds.push_back(Vector::Unit(static_cast<Eigen::Index>(n),
                                                                   static_cast<Eigen::Index>(i)));
  const std::size_t bits = std::min<std::size_t>(n, 10);
  const std::size_t patterns = std::min<std::size_t>(std::size_t{1} << bits, 32);
  const Vector uniform = Vector::Constant(static_cast<Eigen::Index>(n), 1.0 / std::sqrt(double(n)));
  for (std::size_t p = 0; p < patterns; ++p) {
    Vector s = Vector::Ones(static_cast<Eigen::Index>(n));
    for (std::size_t b = 0; b < bits; ++b)
      if (p >> b & 1U) s[static_cast<Eigen::Index>(b)] = -1.0;
    seeds.push_back(uniform + 0.5 * s / std::sqrt(double(n)));
  }
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> gauss;
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    Vector v(static_cast<Eigen::Index>(n));
    for (auto& c : v) c = gauss(rng);
    seeds.push_back(v);
  }
  for (auto& s : seeds) normalize(s);
  return seeds;
}

bool is_local_min(const LaplacianOperator& op, const Vector& x) {
  if (x.size() < 2) return true;
  const TangentModel m = tangent_model(op, x);
  return m.curv.minCoeff() >= -1e-7 * (1.0 + m.curv.cwiseAbs().maxCoeff());
}

}  // namespace

void SolverConfig::validate() const {
  if (restarts < 1) throw Error(ErrorCode::InvalidArgument, "restarts must be >= 1");
  for (double v : {residual_tol, zero_threshold, dedup_angle_cos, dedup_lambda_tol, shift_initial,
                   step_initial, armijo_c, trust_radius})
    if (!(v > 0.0)) throw Error(ErrorCode::InvalidArgument, "solver tolerances must be > 0");
  if (dedup_angle_cos > 1.0) throw Error(ErrorCode::InvalidArgument, "dedup_angle_cos must be <= 1");
}

std::optional<EigenPair> certify(const LaplacianOperator& op, Vector x, double tol,
                                 double zero_threshold) {
  if (!x.allFinite() || !normalize(x)) return std::nullopt;
  EigenPair p;
  p.lambda = op.cost_total(x);
  p.residual = (op.apply(x) - p.lambda * x).norm();
  if (!(p.residual <= tol)) return std::nullopt;
  p.vector = std::move(x);
  p.kind = std::abs(p.lambda) <= zero_threshold ? EigenKind::Zero : EigenKind::Positive;
  return p;
}

EigenSearch find_eigenpairs(const LaplacianOperator& op, const SolverConfig& cfg) {
  cfg.validate();
  EigenSearch out;
  const std::size_t n = op.dimension(), k = op.order();
  if (n == 0) return out;

  auto finish = [&](const Vector& x) -> std::optional<EigenPair> {
    auto p = certify(op, newton_refine(op, x, cfg), cfg.residual_tol, cfg.zero_threshold);
    if (p) canonicalize(*p, k, cfg.zero_threshold);
    return p;
  };

  // Stage 1: minima/maxima and whatever Newton reaches from the raw seeds.
  const auto seeds = seed_vectors(n, cfg);
  enum Route { Newton, Descent, PowerDown, PowerUp, kRoutes };
  struct Found {
    std::optional<EigenPair> pair;
    bool descent = false;
  };
  auto stage1 = parallel_map<Found>(seeds.size() * kRoutes, cfg.threads, [&](std::size_t task) {
    const Vector& s = seeds[task / kRoutes];
    switch (static_cast<Route>(task % kRoutes)) {
      case Newton: return Found{finish(s), false};
      case Descent: return Found{finish(projected_gradient(op, s, cfg)), true};
      case PowerDown: return Found{finish(shifted_power(op, s, false, cfg)), true};
      case PowerUp: return Found{finish(shifted_power(op, s, true, cfg)), false};
      default: return Found{};
    }
  });
  out.starts = stage1.size();

  std::vector<EigenPair> all, minima;
  for (auto& f : stage1) {
    if (!f.pair) continue;
    all.push_back(*f.pair);
    if (f.descent) {
      // Descent may land on either sign of an odd-order pair; climb from the
      // representative that actually minimizes.
      EigenPair m = *f.pair;
      if (op.cost_total(m.vector) > op.cost_total(-m.vector)) m.vector = -m.vector;
      if (is_local_min(op, m.vector)) minima.push_back(std::move(m));
    }
  }
  minima = dedup(std::move(minima), cfg);
  std::stable_sort(minima.begin(), minima.end(), [](const EigenPair& a, const EigenPair& b) {
    return std::abs(a.lambda) < std::abs(b.lambda);
  });
  if (minima.size() > 4) minima.resize(4);

  // Stage 2: climb out of each minimum along its softest modes and along
  // seeded random tangent directions.
  struct Climb {
    Vector start, direction;
  };
  std::vector<Climb> climbs;
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> gauss;
  for (const auto& m : minima) {
    Vector xm = m.vector;
    if (op.cost_total(xm) > op.cost_total(-xm)) xm = -xm;
    if (n < 2) break;
    const TangentModel tm = tangent_model(op, xm);
    const auto modes = std::min<Eigen::Index>(static_cast<Eigen::Index>(cfg.saddle_modes), tm.curv.size());
    std::vector<Vector> dirs;
    for (Eigen::Index j = 0; j < modes; ++j) {
      dirs.push_back(tm.modes.col(j));
      dirs.push_back(-tm.modes.col(j));
    }
    for (std::size_t r = 0; r < cfg.restarts; ++r) {
      Vector v(static_cast<Eigen::Index>(n));
      for (auto& c : v) c = gauss(rng);
      v -= v.dot(xm) * xm;
      if (normalize(v)) dirs.push_back(v);
    }
    for (auto& d : dirs) {
      Vector start = xm + 0.05 * d;
      normalize(start);
      climbs.push_back({std::move(start), std::move(d)});
    }
  }
  auto stage2 = parallel_map<std::optional<EigenPair>>(climbs.size(), cfg.threads, [&](std::size_t i) {
    return finish(follow_mode(op, climbs[i].start, climbs[i].direction, cfg));
  });
  out.starts += stage2.size();
  for (auto& p : stage2)
    if (p) all.push_back(std::move(*p));

  out.converged = !all.empty();
  out.pairs = dedup(std::move(all), cfg);
  return out;
}

std::vector<EigenPair> fiedler_from(const EigenSearch& search, const SolverConfig& cfg) {
  std::vector<EigenPair> positive;
  for (const auto& p : search.pairs)
    if (p.kind == EigenKind::Positive && p.lambda > 0.0) positive.push_back(p);
  if (positive.empty()) throw Error(ErrorCode::NoPositiveEigenpair, "all certified eigenpairs are zero");
  double lmin = positive.front().lambda;
  for (const auto& p : positive) lmin = std::min(lmin, p.lambda);
  std::vector<EigenPair> out;
  for (auto& p : positive)
    if (p.lambda - lmin <= cfg.dedup_lambda_tol) out.push_back(std::move(p));
  std::sort(out.begin(), out.end(),
            [](const EigenPair& a, const EigenPair& b) { return lex_less(a.vector, b.vector, 1e-8); });
  return out;
}

std::vector<EigenPair> fiedler(const LaplacianOperator& op, const SolverConfig& cfg) {
  return fiedler_from(find_eigenpairs(op, cfg), cfg);
}

ZeroReport zero_multiplicity_report(const LaplacianOperator& op, const SolverConfig& cfg) {
  ZeroReport report;
  const std::size_t n = op.dimension();
  if (op.mode() == LaplacianMode::Unnormalized && op.hypergraph().num_edges() == 0) {
    // L is the zero tensor; report the canonical basis as representatives.
    for (std::size_t i = 0; i < n; ++i)
      report.vectors.push_back(Vector::Unit(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(i)));
    report.count = n;
    return report;
  }
  for (const auto& p : find_eigenpairs(op, cfg).pairs)
    if (p.kind == EigenKind::Zero) report.vectors.push_back(p.vector);
  report.count = report.vectors.size();
  return report;
}

}  // namespace hypred
