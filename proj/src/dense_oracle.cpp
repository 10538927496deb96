#include "hypred/dense_oracle.hpp"

#include <algorithm>
#include <cmath>

namespace hypred::dense {
namespace {

// Advances a base-n odometer; returns false after the last index.
bool next_index(std::vector<std::size_t>& idx, std::size_t n) {
  for (std::size_t pos = idx.size(); pos-- > 0;) {
    if (++idx[pos] < n) return true;
    idx[pos] = 0;
  }
  return false;
}

double factorial(std::size_t m) {
  double f = 1.0;
  for (std::size_t i = 2; i <= m; ++i) f *= static_cast<double>(i);
  return f;
}

}  // namespace

std::size_t entry_count(std::size_t n, std::size_t k) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n != 0 && total > kMaxEntries / n) return 0;
    total *= n;
  }
  return total;
}

DenseTensor::DenseTensor(std::size_t order, std::size_t dim) : k_(order), n_(dim) {
  const std::size_t count = entry_count(dim, order);
  if (count == 0 && dim != 0)
    throw Error(ErrorCode::TooLarge, "n^k exceeds " + std::to_string(kMaxEntries) + " entries");
  data_.assign(count, 0.0);
}

std::size_t DenseTensor::offset(std::span<const std::size_t> index) const {
  std::size_t off = 0;
  for (std::size_t i : index) off = off * n_ + i;
  return off;
}

double& DenseTensor::at(std::span<const std::size_t> index) { return data_.at(offset(index)); }
double DenseTensor::at(std::span<const std::size_t> index) const { return data_.at(offset(index)); }

std::size_t DenseTensor::nonzeros() const {
  return static_cast<std::size_t>(std::count_if(data_.begin(), data_.end(), [](double v) { return v != 0.0; }));
}

bool DenseTensor::is_supersymmetric(double tol) const {
  if (n_ == 0) return true;
  std::vector<std::size_t> idx(k_, 0);
  do {
    if (!std::is_sorted(idx.begin(), idx.end())) continue;
    std::vector<std::size_t> perm = idx;
    const double ref = at(idx);
    do {
      if (std::abs(at(perm) - ref) > tol) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (next_index(idx, n_));
  return true;
}

DenseTensor build_dense_laplacian(const Hypergraph& h, LaplacianMode mode) {
  const std::size_t n = h.num_nodes(), k = h.order();
  DenseTensor t(k, n);
  const auto d = degrees(h);
  const double inv_fact = 1.0 / factorial(k - 1);

  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    double value = -h.weight(e) * inv_fact;
    if (mode == LaplacianMode::Normalized)
      for (NodeId v : h.edge(e)) value /= std::pow(d[v], 1.0 / static_cast<double>(k));
    std::vector<std::size_t> perm(h.edge(e).begin(), h.edge(e).end());
    do {
      t.at(perm) += value;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<std::size_t> diag(k);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(diag.begin(), diag.end(), i);
    t.at(diag) = mode == LaplacianMode::Normalized ? 1.0 : d[i];
  }
  if (!t.is_supersymmetric()) throw Error(ErrorCode::InvalidArgument, "dense Laplacian is not super-symmetric");
  return t;
}

double dense_cost(const DenseTensor& t, const Vector& x) {
  const std::size_t n = t.dimension(), k = t.order();
  if (n == 0) return 0.0;
  std::vector<std::size_t> idx(k, 0);
  double total = 0.0;
  std::size_t flat = 0;
  do {
    double term = t.flat(flat++);
    if (term != 0.0) {
      for (std::size_t i : idx) term *= x[static_cast<Eigen::Index>(i)];
      total += term;
    }
  } while (next_index(idx, n));
  return total;
}

Vector dense_apply(const DenseTensor& t, const Vector& x) {
  const std::size_t n = t.dimension(), k = t.order();
  Vector y = Vector::Zero(static_cast<Eigen::Index>(n));
  if (n == 0) return y;
  std::vector<std::size_t> idx(k, 0);
  std::size_t flat = 0;
  do {
    double term = t.flat(flat++);
    if (term != 0.0) {
      for (std::size_t p = 1; p < k; ++p) term *= x[static_cast<Eigen::Index>(idx[p])];
      y[static_cast<Eigen::Index>(idx[0])] += term;
    }
  } while (next_index(idx, n));
  return y;
}

}  // namespace hypred::dense
