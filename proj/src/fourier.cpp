#include "htrans/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace htrans {

namespace {

using Complex = std::complex<double>;

// (-i)^m cycles through 1, -i, -1, i.
Eigen::VectorXcd fourier_phases(int n) {
  static constexpr Complex cycle[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  Eigen::VectorXcd p(n);
  for (int m = 0; m < n; ++m) p(m) = cycle[m & 3];
  return p;
}

// Real-matrix times complex-vector without materializing a complex copy.
Eigen::VectorXcd real_mul(const Eigen::MatrixXd& a, const Eigen::VectorXcd& x,
                          bool transpose) {
  Eigen::VectorXcd y(a.rows());
  if (transpose) {
    y.real() = a.transpose() * x.real();
    y.imag() = a.transpose() * x.imag();
  } else {
    y.real() = a * x.real();
    y.imag() = a * x.imag();
  }
  return y;
}

Eigen::VectorXcd factored_apply(const BasisMatrix& basis, const Eigen::VectorXcd& x,
                                bool conjugate) {
  const int n = basis.grid.order;
  Eigen::VectorXcd ux = real_mul(basis.entries, x, false);
  const Eigen::VectorXcd phases = fourier_phases(n);
  for (int m = 0; m < n; ++m) ux(m) *= conjugate ? std::conj(phases(m)) : phases(m);
  return real_mul(basis.entries, ux, true);
}

}  // namespace

Eigen::VectorXd checkerboard_signs(int n) {
  Eigen::VectorXd s(n);
  for (int k = 0; k < n; ++k) s(k) = (k % 2 == 0) ? -1.0 : 1.0;
  return s;
}

SampleVector FourierMatrix::apply(const SampleVector& x) const {
  if (x.size() != order())
    throw std::invalid_argument("FourierMatrix::apply: grid mismatch");
  return factored_apply(basis, x, false);
}

SampleVector FourierMatrix::apply_conjugate(const SampleVector& x) const {
  if (x.size() != order())
    throw std::invalid_argument("FourierMatrix::apply_conjugate: grid mismatch");
  return factored_apply(basis, x, true);
}

FourierMatrix build_fourier_matrix(BasisMatrix basis) {
  const int n = basis.grid.order;
  FourierMatrix fourier;
  const Eigen::MatrixXcd u = basis.entries.cast<Complex>();
  const Eigen::VectorXcd phases = fourier_phases(n);
  fourier.entries = u.transpose() * (phases.asDiagonal() * u);
  fourier.basis = std::move(basis);
  return fourier;
}

std::complex<double> asymptotic_kernel(const HermiteGrid& grid, int k, int j) {
  const int n = grid.order;
  if (k < 0 || k >= n || j < 0 || j >= n)
    throw std::invalid_argument("asymptotic_kernel: index out of range");
  const double dt = std::numbers::pi / std::sqrt(2.0 * n);
  const double parity = ((j + k) % 2 == 0) ? 1.0 : -1.0;
  const double arg = -grid.zeros(j) * grid.zeros(k);
  return dt / std::sqrt(2 * std::numbers::pi) * parity *
         Complex(std::cos(arg), std::sin(arg));
}

SampleVector fourier_quadrature(const FourierMatrix& fourier, const SampleVector& f) {
  const int n = fourier.order();
  if (f.size() != n)
    throw std::invalid_argument("fourier_quadrature: grid mismatch");
  const Eigen::VectorXd signs = checkerboard_signs(n);
  Eigen::VectorXcd df(n);
  for (int j = 0; j < n; ++j) df(j) = signs(j) * f(j);
  Eigen::VectorXcd out = fourier.apply(df);
  const double scale = std::sqrt(2 * std::numbers::pi);
  for (int k = 0; k < n; ++k) out(k) *= scale * signs(k);
  return out;
}

}  // namespace htrans
