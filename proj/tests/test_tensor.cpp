#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "htrans/tensor.hpp"
#include "oracle_helpers.hpp"

using namespace htrans;
using Complex = std::complex<double>;

namespace {

LaplaceOperator make_1d(int n) {
  return build_laplace(build_fourier_matrix(basis_matrix(hermite_zeros(n))));
}

// (L_n (x) ... (x) L_1) materialized, axis 0 innermost.
Eigen::MatrixXcd dense_kronecker(const std::vector<int>& orders, TransformDirection dir) {
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(1, 1);
  for (int n : orders) {
    const LaplaceOperator op = make_1d(n);
    const Eigen::MatrixXcd& m =
        dir == TransformDirection::Forward ? op.forward : op.inverse;
    acc = oracle::kron(m, acc);
  }
  return acc;
}

}  // namespace

TEST_CASE("TensorLayout: flatten/unflatten") {
  TensorLayout layout{{3, 4}};
  CHECK(layout.total() == 12);
  // 1-based (1,1) -> r=1 and (3,4) -> r=12, shifted to 0-based
  CHECK(layout.flatten(std::array{0, 0}) == 0);
  CHECK(layout.flatten(std::array{2, 3}) == 11);

  TensorLayout layout3{{2, 3, 2}};
  // 1-based (2,3,1) -> r = 2 + 2*2 + 0*6 = 6
  CHECK(layout3.flatten(std::array{1, 2, 0}) == 5);

  CHECK_THROWS_AS(layout.flatten(std::array{3, 0}), std::out_of_range);
  CHECK_THROWS_AS(layout.flatten(std::array{0, -1}), std::out_of_range);
  CHECK_THROWS_AS(layout.flatten(std::array{0}), std::invalid_argument);
  CHECK_THROWS_AS(layout.unflatten(12), std::out_of_range);
}

TEST_CASE("TensorLayout: exhaustive bijectivity for P <= 64") {
  const std::vector<std::vector<int>> shapes = {
      {1}, {5}, {64}, {2, 2}, {3, 4}, {8, 8}, {2, 3, 2}, {5, 5}, {4, 4, 4}, {2, 2, 2, 2},
      {3, 2, 5}, {2, 2, 3, 2}};
  for (const auto& shape : shapes) {
    CAPTURE(shape.size());
    TensorLayout layout{shape};
    const std::size_t p = layout.total();
    REQUIRE(p <= 64);
    std::vector<bool> seen(p, false);
    std::vector<int> idx(shape.size(), 0);
    for (;;) {
      const std::size_t r = layout.flatten(idx);
      CHECK(!seen[r]);
      seen[r] = true;
      CHECK(layout.unflatten(r) == idx);
      // odometer increment
      std::size_t axis = 0;
      while (axis < shape.size() && ++idx[axis] == shape[axis]) idx[axis++] = 0;
      if (axis == shape.size()) break;
    }
    for (bool s : seen) CHECK(s);
  }
}

TEST_CASE("TensorOperator: construction limits") {
  CHECK_THROWS_AS(TensorOperator({}, TransformDirection::Forward), std::invalid_argument);
  CHECK_THROWS_AS(TensorOperator({2, 2, 2, 2, 2}, TransformDirection::Forward),
                  std::invalid_argument);
  CHECK_THROWS_AS(TensorOperator({0}, TransformDirection::Forward), std::invalid_argument);
  const TensorOperator op({5, 5}, TransformDirection::Forward);
  // equal orders share one per-axis operator
  CHECK(&op.axis_operator(0) == &op.axis_operator(1));
}

TEST_CASE("tensor_apply: one axis degenerates to the 1-D operator") {
  const int n = 9;
  const LaplaceOperator op = make_1d(n);
  const Eigen::VectorXcd x = oracle::random_complex_vector(n, 5u);
  const TensorOperator forward({n}, TransformDirection::Forward);
  const TensorOperator inverse({n}, TransformDirection::Inverse);
  CHECK((forward.apply(x) - laplace_forward(op, x)).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK((inverse.apply(x) - laplace_inverse(op, x)).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("tensor_apply: equals the materialized Kronecker product for P <= 64") {
  const std::vector<std::vector<int>> shapes = {{3, 4}, {2, 3, 2}, {5, 5}, {2, 2, 2, 2},
                                                {6, 2}, {2, 32}};
  for (const auto& shape : shapes) {
    CAPTURE(shape.size());
    std::size_t p = 1;
    for (int n : shape) p *= static_cast<std::size_t>(n);
    REQUIRE(p <= 64);
    const Eigen::VectorXcd x =
        oracle::random_complex_vector(static_cast<int>(p), 17u + static_cast<unsigned>(p));
    for (TransformDirection dir : {TransformDirection::Forward, TransformDirection::Inverse}) {
      const TensorOperator op(shape, dir);
      const Eigen::MatrixXcd dense = dense_kronecker(shape, dir);
      CHECK((op.apply(x) - dense * x).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("tensor_apply: ordering conforms to the flattening map") {
  // brute-force nested contraction of A[j1,j2] must agree entry-by-entry
  const std::vector<int> shape = {3, 4};
  const TensorLayout layout{shape};
  const LaplaceOperator op1 = make_1d(3);
  const LaplaceOperator op2 = make_1d(4);
  const Eigen::VectorXcd x = oracle::random_complex_vector(12, 41u);
  const TensorOperator op(shape, TransformDirection::Forward);
  const Eigen::VectorXcd y = op.apply(x);

  for (int k1 = 0; k1 < 3; ++k1)
    for (int k2 = 0; k2 < 4; ++k2) {
      Complex sum = 0.0;
      for (int j1 = 0; j1 < 3; ++j1)
        for (int j2 = 0; j2 < 4; ++j2)
          sum += op1.forward(k1, j1) * op2.forward(k2, j2) *
                 x(static_cast<long>(layout.flatten(std::array{j1, j2})));
      CHECK(std::abs(y(static_cast<long>(layout.flatten(std::array{k1, k2}))) - sum) <=
            1e-12);
    }
}

TEST_CASE("tensor_apply: separable input transforms to the outer product") {
  const int n = 40;
  const LaplaceOperator op1 = make_1d(n);
  const HermiteGrid& grid = op1.grid();
  Eigen::VectorXcd gauss(n);
  for (int j = 0; j < n; ++j)
    gauss(j) = std::exp(-grid.zeros(j) * grid.zeros(j) / 2);
  const Eigen::VectorXcd g1 = laplace_forward(op1, gauss);

  const TensorOperator op({n, n}, TransformDirection::Forward);
  Eigen::VectorXcd f2(n * n);
  for (int j2 = 0; j2 < n; ++j2)
    for (int j1 = 0; j1 < n; ++j1) f2(j1 + n * j2) = gauss(j1) * gauss(j2);
  const Eigen::VectorXcd g2 = op.apply(f2);
  double dev = 0.0;
  for (int k2 = 0; k2 < n; ++k2)
    for (int k1 = 0; k1 < n; ++k1)
      dev = std::max(dev, std::abs(g2(k1 + n * k2) - g1(k1) * g1(k2)));
  CHECK(dev <= 1e-12);
}

TEST_CASE("tensor_apply: round trip on random tensors") {
  for (const auto& shape : std::vector<std::vector<int>>{{3, 4}, {2, 3, 2}, {5, 5}}) {
    std::size_t p = 1;
    for (int n : shape) p *= static_cast<std::size_t>(n);
    const Eigen::VectorXcd x =
        oracle::random_complex_vector(static_cast<int>(p), 3u + static_cast<unsigned>(p));
    const TensorOperator fwd(shape, TransformDirection::Forward);
    const TensorOperator inv(shape, TransformDirection::Inverse);
    CHECK((inv.apply(fwd.apply(x)) - x).cwiseAbs().maxCoeff() <= 1e-11 * double(p));
  }
}

TEST_CASE("tensor_apply: validation") {
  const TensorOperator op({3, 4}, TransformDirection::Forward);
  CHECK_THROWS_AS(op.apply(Eigen::VectorXcd::Zero(11)), std::invalid_argument);
  Eigen::VectorXcd bad = Eigen::VectorXcd::Zero(12);
  bad(5) = Complex(0.0, std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(op.apply(bad), std::invalid_argument);
}
