#pragma once

#include "htrans/laplace.hpp"

namespace htrans {

// Space abscissae x_j = exp(-t_j) of the Mellin sampling, strictly decreasing
// with x_j * x_{N+1-j} = 1 by zero antisymmetry. For even N no node hits the
// axis point x = 1.
struct MellinNodes {
  HermiteGrid grid;
  Eigen::VectorXd abscissae;
};

MellinNodes mellin_nodes(const HermiteGrid& grid);

// Discrete Mellin transform at s_k = i t_k: the Laplace operator applied to
// f_t(t_j) = f(exp(-t_j)). No change-of-variables Jacobian appears anywhere;
// the substitution is exact at the level of the integral.
SampleVector mellin_forward(const LaplaceOperator& op,
                            const std::function<std::complex<double>(double)>& f);
// Same with pre-sampled values f(x_j), ordered by ascending t (descending x).
SampleVector mellin_forward(const LaplaceOperator& op, const SampleVector& space_samples);

// Inverse pair: returns approximants to f_t(t_j) = f(exp(-t_j)) on the t
// grid, deliberately NOT resampled to f(x); map nodes via mellin_nodes.
SampleVector mellin_inverse(const LaplaceOperator& op, const SampleVector& g);

}  // namespace htrans
