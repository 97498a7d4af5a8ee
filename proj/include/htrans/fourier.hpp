#pragma once

#include <complex>

#include "htrans/hermite.hpp"

namespace htrans {

// Checkerboard sign mask (-1)^k for 1-based k over ascending zeros. Pinned
// here once so the parity factors of the quadrature formulas are unambiguous.
Eigen::VectorXd checkerboard_signs(int n);

// Discrete Fourier matrix F = U^T diag((-i)^m) U. Unitary and symmetric;
// applying it to a column of U^T (a basis function sampled on the grid)
// rotates the column by the eigenvalue phase (-i)^n. The dense matrix is kept
// for inspection and tests; apply()/apply_conjugate() go through the
// factorization and never touch it.
struct FourierMatrix {
  BasisMatrix basis;
  Eigen::MatrixXcd entries;

  int order() const { return basis.grid.order; }
  const HermiteGrid& grid() const { return basis.grid; }

  // Matrix-free F x (or conj(F) x): U^T diag(phase) U x, cost O(N^2).
  SampleVector apply(const SampleVector& x) const;
  SampleVector apply_conjugate(const SampleVector& x) const;
};

FourierMatrix build_fourier_matrix(BasisMatrix basis);

// Large-N reference value (dt/sqrt(2 pi)) (-1)^{j+k} exp(-i t_j w_k) with
// dt = pi/sqrt(2N), for 0-based indices k, j. Validation only; F itself is
// always the exact eigenvector product.
std::complex<double> asymptotic_kernel(const HermiteGrid& grid, int k, int j);

// Quadrature for the integral Fourier transform at the grid frequencies:
// out_k = sqrt(2 pi) sum_j (-1)^{j+k} F_{kj} f_j, applied matrix-free.
SampleVector fourier_quadrature(const FourierMatrix& fourier, const SampleVector& f);

}  // namespace htrans
