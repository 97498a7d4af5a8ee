#include "htrans/hermite.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace htrans {

namespace {

// psi_n and psi_{n-1} at x, same recurrence as weighted_hermite_values.
void weighted_pair(int n, double x, double& psi_n, double& psi_nm1) {
  double prev = 0.0;
  double cur = std::pow(std::numbers::pi, -0.25) * std::exp(-x * x / 2);
  for (int m = 0; m < n; ++m) {
    const double next =
        x * std::sqrt(2.0 / (m + 1)) * cur - std::sqrt(double(m) / (m + 1)) * prev;
    prev = cur;
    cur = next;
  }
  psi_n = cur;
  psi_nm1 = prev;
}

// Newton residual |psi_N / psi_N'| at x with psi_N' = -x psi_N + sqrt(2N) psi_{N-1}.
double newton_step(int n, double x) {
  double pn, pnm1;
  weighted_pair(n, x, pn, pnm1);
  const double dpn = -x * pn + std::sqrt(2.0 * n) * pnm1;
  return pn / dpn;
}

void validate_grid(const HermiteGrid& grid) {
  const int n = grid.order;
  const Eigen::VectorXd& t = grid.zeros;
  const double bound = std::sqrt(2.0 * n + 1);
  for (int k = 0; k + 1 < n; ++k) {
    if (!(t(k) < t(k + 1)))
      throw std::runtime_error("hermite_zeros: zeros not strictly ascending at index " +
                               std::to_string(k));
  }
  for (int k = 0; k < n; ++k) {
    if (t(k) + t(n - 1 - k) != 0.0)
      throw std::runtime_error("hermite_zeros: antisymmetry violated at index " +
                               std::to_string(k));
    if (!(std::abs(t(k)) < bound))
      throw std::runtime_error("hermite_zeros: zero outside (-sqrt(2N+1), sqrt(2N+1))");
    if (!(std::abs(newton_step(n, t(k))) <= 1e-12 * bound))
      throw std::runtime_error("hermite_zeros: recurrence residual too large at index " +
                               std::to_string(k));
  }
  if (n % 2 == 1 && t(n / 2) != 0.0)
    throw std::runtime_error("hermite_zeros: middle zero of odd order not exactly 0");
}

}  // namespace

HermiteGrid hermite_zeros(int order, int order_cap) {
  if (order < 1)
    throw std::invalid_argument("hermite_zeros: order must be positive, got " +
                                std::to_string(order));
  if (order > order_cap)
    throw std::invalid_argument("hermite_zeros: order " + std::to_string(order) +
                                " exceeds cap " + std::to_string(order_cap));

  Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
  Eigen::VectorXd sub(order > 1 ? order - 1 : 0);
  for (int k = 1; k < order; ++k) sub(k - 1) = std::sqrt(k / 2.0);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermite_zeros: tridiagonal eigensolver failed");
  Eigen::VectorXd raw = solver.eigenvalues();

  for (int k = 0; k < order; ++k) raw(k) -= newton_step(order, raw(k));

  HermiteGrid grid;
  grid.order = order;
  grid.zeros.resize(order);
  // (a - b)/2 and (b - a)/2 are exact negations, so antisymmetry is bitwise.
  for (int k = 0; k < order; ++k)
    grid.zeros(k) = (raw(k) - raw(order - 1 - k)) / 2;

  validate_grid(grid);
  return grid;
}

Eigen::VectorXd weighted_hermite_values(int count, double x) {
  if (count < 1)
    throw std::invalid_argument("weighted_hermite_values: count must be positive");
  if (!std::isfinite(x))
    throw std::invalid_argument("weighted_hermite_values: x must be finite");
  Eigen::VectorXd psi(count);
  psi(0) = std::pow(std::numbers::pi, -0.25) * std::exp(-x * x / 2);
  if (count > 1) psi(1) = std::sqrt(2.0) * x * psi(0);
  for (int m = 1; m + 1 < count; ++m)
    psi(m + 1) =
        x * std::sqrt(2.0 / (m + 1)) * psi(m) - std::sqrt(double(m) / (m + 1)) * psi(m - 1);
  return psi;
}

BasisMatrix basis_matrix(const HermiteGrid& grid) {
  const int n = grid.order;
  if (n < 1 || grid.zeros.size() != n)
    throw std::invalid_argument("basis_matrix: invalid grid");

  BasisMatrix basis;
  basis.grid = grid;
  basis.entries.resize(n, n);
  const double sqrt_n = std::sqrt(double(n));
  for (int k = 0; k < n; ++k) {
    const Eigen::VectorXd psi = weighted_hermite_values(n, grid.zeros(k));
    const double denom = sqrt_n * psi(n - 1);
    if (denom == 0.0)
      throw std::runtime_error("basis_matrix: psi_{N-1} vanished at node " +
                               std::to_string(k) + " (corrupted grid)");
    basis.entries.col(k) = psi / denom;
    const double norm = basis.entries.col(k).norm();
    if (std::abs(norm - 1.0) > 1e-12)
      throw std::runtime_error("basis_matrix: column " + std::to_string(k) +
                               " norm deviates from 1 by " + std::to_string(norm - 1.0));
  }
  return basis;
}

}  // namespace htrans
