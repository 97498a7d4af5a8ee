#pragma once

#include <Eigen/Dense>

namespace htrans {

// Complex samples on a node grid, one value per node.
using SampleVector = Eigen::VectorXcd;

// Largest order validated against underflow of the weighted recurrence start
// value exp(-t^2/2) at the extreme zeros. Raising it past ~700 underflows.
inline constexpr int kDefaultOrderCap = 512;

// The N zeros of the Hermite polynomial H_N, ascending. Shared time/frequency
// grid of every operator in this library. Antisymmetry t_k = -t_{N+1-k} holds
// bitwise; the middle zero is exactly 0 for odd N.
struct HermiteGrid {
  int order = 0;
  Eigen::VectorXd zeros;
};

// Computes the grid as eigenvalues of the symmetric tridiagonal Jacobi matrix
// (off-diagonal sqrt(n/2)), polishes each eigenvalue with one Newton step on
// the scaled recurrence and symmetrizes. Throws std::invalid_argument for
// order < 1 or order > order_cap, std::runtime_error if validation of the
// grid invariants fails.
HermiteGrid hermite_zeros(int order, int order_cap = kDefaultOrderCap);

// Orthonormal weighted Hermite functions psi_m(x) = e^{-x^2/2} H_m(x) /
// sqrt(2^m m! sqrt(pi)) for m = 0..count-1, evaluated by the three-term
// recurrence psi_{m+1} = x sqrt(2/(m+1)) psi_m - sqrt(m/(m+1)) psi_{m-1}
// with the Gaussian weight folded into psi_0. Every intermediate stays
// representable for |x| inside the zero interval of orders up to the cap.
Eigen::VectorXd weighted_hermite_values(int count, double x);

// Real orthogonal matrix U with entries(m, k) = phi_m(t_k), m, k = 0..N-1,
// where phi_m(t_k) = psi_m(t_k) / (sqrt(N) psi_{N-1}(t_k)). Columns are the
// eigenvectors of the Jacobi matrix with a deterministic sign convention;
// column norms are exactly 1 by the Christoffel-Darboux identity.
struct BasisMatrix {
  HermiteGrid grid;
  Eigen::MatrixXd entries;
};

// Builds U by direct evaluation at the grid zeros. Throws std::runtime_error
// if psi_{N-1} vanishes at a node or a column norm deviates from 1 by more
// than 1e-12 (both signal a corrupted grid).
BasisMatrix basis_matrix(const HermiteGrid& grid);

}  // namespace htrans
