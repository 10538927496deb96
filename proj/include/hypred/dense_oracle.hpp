#pragma once

#include <vector>

#include "hypred/hypergraph.hpp"
#include "hypred/laplacian.hpp"

namespace hypred::dense {

/// Entry-count guard for materialized tensors.
inline constexpr std::size_t kMaxEntries = 10'000'000;

/// n^k, or nullopt-like 0 when it overflows kMaxEntries.
std::size_t entry_count(std::size_t n, std::size_t k);

/**
 * Order-k, dimension-n tensor with row-major multi-index storage.
 * Brute-force reference for the sparse Laplacian; O(n^k) everywhere.
 */
class DenseTensor {
 public:
  DenseTensor(std::size_t order, std::size_t dim);

  std::size_t order() const noexcept { return k_; }
  std::size_t dimension() const noexcept { return n_; }
  std::size_t size() const noexcept { return data_.size(); }

  double& at(std::span<const std::size_t> index);
  double at(std::span<const std::size_t> index) const;
  double flat(std::size_t i) const { return data_[i]; }

  std::size_t nonzeros() const;
  bool is_supersymmetric(double tol = 0.0) const;

 private:
  std::size_t offset(std::span<const std::size_t> index) const;

  std::size_t k_;
  std::size_t n_;
  std::vector<double> data_;
};

/// Entry-wise construction of L (or the normalized variant); asserts
/// super-symmetry. Throws TooLarge when n^k exceeds kMaxEntries.
DenseTensor build_dense_laplacian(const Hypergraph& h, LaplacianMode mode);

double dense_cost(const DenseTensor& t, const Vector& x);
Vector dense_apply(const DenseTensor& t, const Vector& x);

}  // namespace hypred::dense
