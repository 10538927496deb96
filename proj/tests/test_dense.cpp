#include <doctest.h>

#include "hypred/dense_oracle.hpp"
#include "test_util.hpp"

using namespace hypred;
using namespace hypred::testing;

TEST_CASE("H4 tensor entries") {
  const auto t = dense::build_dense_laplacian(h4(), LaplacianMode::Unnormalized);
  CHECK(t.is_supersymmetric());
  const std::size_t i1111[] = {0, 0, 0, 0}, i1234[] = {0, 1, 2, 3}, i4321[] = {3, 2, 1, 0},
                    i2222[] = {1, 1, 1, 1}, i1245[] = {0, 1, 3, 4};
  CHECK(t.at(i1111) == 2.0);
  CHECK(t.at(i2222) == 3.0);
  CHECK(t.at(i1234) == doctest::Approx(-1.0 / 6.0));
  CHECK(t.at(i4321) == t.at(i1234));
  CHECK(t.at(i1245) == 0.0);
  // 5 diagonal entries plus 4! permutations per edge.
  CHECK(t.nonzeros() == 5 + 3 * 24);
}

TEST_CASE("dense cost and apply") {
  const auto t = dense::build_dense_laplacian(h4(), LaplacianMode::Unnormalized);
  Vector e1 = Vector::Zero(5);
  e1[0] = 1.0;
  CHECK(dense::dense_cost(t, e1) == doctest::Approx(2.0));
  CHECK(dense::dense_apply(t, e1)[0] == doctest::Approx(2.0));
  CHECK(dense::dense_apply(t, Vector::Ones(5)).norm() < 1e-12);
  std::mt19937_64 rng(9);
  for (int c = 0; c < 20; ++c) {
    const Vector x = random_vector(5, rng);
    CHECK(x.dot(dense::dense_apply(t, x)) == doctest::Approx(dense::dense_cost(t, x)).epsilon(1e-12));
  }
}

TEST_CASE("normalized tensor scales off-diagonal entries") {
  const auto h = h5();
  const auto t = dense::build_dense_laplacian(h, LaplacianMode::Normalized);
  const std::size_t i123[] = {0, 1, 2}, i111[] = {0, 0, 0};
  CHECK(t.at(i111) == 1.0);
  CHECK(t.at(i123) == doctest::Approx(-0.5 / std::cbrt(2.0 * 3.0 * 2.0)));
}

TEST_CASE("size guard") {
  CHECK(dense::entry_count(10, 3) == 1000);
  CHECK(dense::entry_count(100, 4) == 0);
  CHECK_THROWS_AS(dense::DenseTensor(4, 100), Error);
}
