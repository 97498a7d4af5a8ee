#pragma once

#include <functional>

#include "htrans/fourier.hpp"

namespace htrans {

// Discrete two-sided Laplace transform on the imaginary axis s_k = i t_k and
// its Bromwich-quadrature inverse. Forward entries L_{kj} = sqrt(2 pi)
// (-1)^{j+k} F_{kj}; inverse entries (-1)^{j+k} conj(F)_{jk} / sqrt(2 pi).
// Both are symmetric and L^{-1} L = I exactly (unitarity of F). Immutable
// after construction; applications are pure.
struct LaplaceOperator {
  FourierMatrix fourier;
  Eigen::MatrixXcd forward;
  Eigen::MatrixXcd inverse;

  int order() const { return fourier.order(); }
  const HermiteGrid& grid() const { return fourier.grid(); }
};

LaplaceOperator build_laplace(FourierMatrix fourier);

// g_k ~ two-sided Laplace transform of f at s_k = i t_k. Matrix-free.
SampleVector laplace_forward(const LaplaceOperator& op, const SampleVector& f);

// f_j ~ (1/2 pi i) Bromwich integral along the imaginary axis of g, whose
// singularities must lie strictly left of it (principal-value data allowed).
SampleVector laplace_inverse(const LaplaceOperator& op, const SampleVector& g);

// Samples h on the nonnegative nodes and zero-fills the negative ones; the
// node at t = 0 (odd N) receives full weight h(0). Throws if h is non-finite
// at a nonnegative node.
SampleVector causal_embed(const std::function<std::complex<double>(double)>& h,
                          const HermiteGrid& grid);

}  // namespace htrans
