#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "htrans/hermite.hpp"
#include "oracle_helpers.hpp"

using namespace htrans;

namespace {

// Newton residual |psi_N / psi_N'| via the library's own recurrence values.
double grid_residual(const HermiteGrid& grid, int k) {
  const Eigen::VectorXd psi = weighted_hermite_values(grid.order + 1, grid.zeros(k));
  const double dpn = -grid.zeros(k) * psi(grid.order) +
                     std::sqrt(2.0 * grid.order) * psi(grid.order - 1);
  return std::abs(psi(grid.order) / dpn);
}

}  // namespace

TEST_CASE("hermite_zeros: closed-form small orders") {
  CHECK(hermite_zeros(1).zeros(0) == 0.0);

  const HermiteGrid g2 = hermite_zeros(2);
  CHECK(g2.zeros(0) == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(g2.zeros(1) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

  const HermiteGrid g3 = hermite_zeros(3);
  CHECK(g3.zeros(0) == doctest::Approx(-std::sqrt(1.5)).epsilon(1e-15));
  CHECK(g3.zeros(1) == 0.0);
  CHECK(g3.zeros(2) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-15));
}

TEST_CASE("hermite_zeros: grid invariants and interlacing up to the cap") {
  Eigen::VectorXd previous;
  for (int n = 1; n <= kDefaultOrderCap; ++n) {
    CAPTURE(n);
    const HermiteGrid grid = hermite_zeros(n);
    REQUIRE(grid.zeros.size() == n);
    const double bound = std::sqrt(2.0 * n + 1);
    bool ascending = true, antisymmetric = true, inside = true, interlaced = true;
    double worst_residual = 0.0;
    for (int k = 0; k < n; ++k) {
      if (k + 1 < n) ascending = ascending && grid.zeros(k) < grid.zeros(k + 1);
      antisymmetric = antisymmetric && grid.zeros(k) + grid.zeros(n - 1 - k) == 0.0;
      inside = inside && std::abs(grid.zeros(k)) < bound;
      worst_residual = std::max(worst_residual, grid_residual(grid, k));
      if (k + 1 < n)
        interlaced = interlaced && grid.zeros(k) < previous(k) && previous(k) < grid.zeros(k + 1);
    }
    CHECK(ascending);
    CHECK(antisymmetric);  // bitwise, by construction
    CHECK(inside);
    CHECK(interlaced);
    CHECK(worst_residual <= 1e-12 * bound);
    if (n % 2 == 1) CHECK(grid.zeros(n / 2) == 0.0);
    previous = grid.zeros;
  }
}

TEST_CASE("hermite_zeros: order validation and the cap knob") {
  CHECK_THROWS_AS(hermite_zeros(0), std::invalid_argument);
  CHECK_THROWS_AS(hermite_zeros(-3), std::invalid_argument);
  CHECK_THROWS_AS(hermite_zeros(513), std::invalid_argument);
  CHECK_THROWS_AS(hermite_zeros(30, 20), std::invalid_argument);
  // raising the cap re-validates; 600 still clears the underflow margin
  const HermiteGrid g = hermite_zeros(600, 1024);
  CHECK(g.order == 600);
}

TEST_CASE("weighted_hermite_values: trivial values at zero") {
  const double quartic = std::pow(std::numbers::pi, -0.25);
  const Eigen::VectorXd one = weighted_hermite_values(1, 0.0);
  CHECK(one(0) == doctest::Approx(quartic).epsilon(1e-15));
  const Eigen::VectorXd two = weighted_hermite_values(2, 0.0);
  CHECK(two(0) == doctest::Approx(quartic).epsilon(1e-15));
  CHECK(two(1) == 0.0);
}

TEST_CASE("weighted_hermite_values: frozen high-precision values at x=1.3") {
  const Eigen::VectorXd psi = weighted_hermite_values(4, 1.3);
  const double expected[4] = {0.3226515045649637741, 0.59318757377861326568,
                              0.54299477907426906628, 0.092023768909419682982};
  for (int m = 0; m < 4; ++m) {
    CAPTURE(m);
    CHECK(std::abs(psi(m) - expected[m]) <= 1e-13 * std::abs(expected[m]));
  }
}

TEST_CASE("weighted_hermite_values: recurrence matches exact coefficients") {
  for (double x : {-2.0, -0.5, 0.0, 1.0, 3.0}) {
    const Eigen::VectorXd psi = weighted_hermite_values(9, x);
    for (int m = 0; m <= 8; ++m) {
      CAPTURE(x);
      CAPTURE(m);
      const double exact = oracle::psi_exact(m, x);
      if (exact == 0.0)
        CHECK(psi(m) == 0.0);
      else
        CHECK(std::abs(psi(m) - exact) <= 1e-13 * std::abs(exact));
    }
  }
}

TEST_CASE("weighted_hermite_values: input validation") {
  CHECK_THROWS_AS(weighted_hermite_values(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(weighted_hermite_values(4, std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(weighted_hermite_values(4, INFINITY), std::invalid_argument);
}

TEST_CASE("basis_matrix: closed-form small orders") {
  const BasisMatrix u1 = basis_matrix(hermite_zeros(1));
  CHECK(u1.entries(0, 0) == doctest::Approx(1.0).epsilon(1e-15));

  const BasisMatrix u2 = basis_matrix(hermite_zeros(2));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(u2.entries(0, 0) == doctest::Approx(-r).epsilon(1e-14));
  CHECK(u2.entries(1, 0) == doctest::Approx(r).epsilon(1e-14));
  CHECK(u2.entries(0, 1) == doctest::Approx(r).epsilon(1e-14));
  CHECK(u2.entries(1, 1) == doctest::Approx(r).epsilon(1e-14));
}

TEST_CASE("basis_matrix: matches the closed-form eigenvector elements") {
  for (int n = 2; n <= 12; ++n) {
    CAPTURE(n);
    const BasisMatrix basis = basis_matrix(hermite_zeros(n));
    for (int k = 0; k < n; ++k)
      for (int m = 0; m < n; ++m) {
        CAPTURE(m);
        CAPTURE(k);
        const double exact = oracle::phi_exact(n, m, basis.grid.zeros(k));
        CHECK(std::abs(basis.entries(m, k) - exact) <= 1e-12);
      }
  }
}

TEST_CASE("basis_matrix: orthogonality") {
  for (int n : {2, 5, 10, 12, 40, 100}) {
    CAPTURE(n);
    const BasisMatrix basis = basis_matrix(hermite_zeros(n));
    const Eigen::MatrixXd gram = basis.entries.transpose() * basis.entries;
    const double dev = (gram - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
    CHECK(dev <= 1e-12 * n);
    if (n <= 12) CHECK(dev <= 1e-13);
    for (int k = 0; k < n; ++k)
      CHECK(std::abs(basis.entries.col(k).norm() - 1.0) <= 1e-12);
  }
}

TEST_CASE("basis_matrix: columns are eigenvectors of the Jacobi matrix") {
  for (int n : {2, 5, 10, 40, 100}) {
    CAPTURE(n);
    const BasisMatrix basis = basis_matrix(hermite_zeros(n));
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
      jacobi(k - 1, k) = std::sqrt(k / 2.0);
      jacobi(k, k - 1) = jacobi(k - 1, k);
    }
    for (int k = 0; k < n; ++k) {
      const Eigen::VectorXd residual =
          jacobi * basis.entries.col(k) - basis.grid.zeros(k) * basis.entries.col(k);
      CHECK(residual.cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("basis_matrix: rejects a corrupted grid") {
  HermiteGrid bad;
  bad.order = 2;
  bad.zeros.resize(2);
  bad.zeros << 0.0, 0.0;  // psi_1(0) = 0
  CHECK_THROWS_AS(basis_matrix(bad), std::runtime_error);

  HermiteGrid empty;
  CHECK_THROWS_AS(basis_matrix(empty), std::invalid_argument);
}
