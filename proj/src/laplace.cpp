#include "htrans/laplace.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace htrans {

namespace {
const double kSqrt2Pi = std::sqrt(2 * std::numbers::pi);
}

LaplaceOperator build_laplace(FourierMatrix fourier) {
  const int n = fourier.order();
  const Eigen::VectorXd signs = checkerboard_signs(n);
  LaplaceOperator op;
  op.forward.resize(n, n);
  op.inverse.resize(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const double parity = signs(k) * signs(j);
      op.forward(k, j) = kSqrt2Pi * parity * fourier.entries(k, j);
      op.inverse(j, k) = parity * std::conj(fourier.entries(j, k)) / kSqrt2Pi;
    }
  op.fourier = std::move(fourier);
  return op;
}

SampleVector laplace_forward(const LaplaceOperator& op, const SampleVector& f) {
  if (f.size() != op.order())
    throw std::invalid_argument("laplace_forward: grid mismatch");
  return fourier_quadrature(op.fourier, f);
}

SampleVector laplace_inverse(const LaplaceOperator& op, const SampleVector& g) {
  const int n = op.order();
  if (g.size() != n)
    throw std::invalid_argument("laplace_inverse: grid mismatch");
  for (int k = 0; k < n; ++k)
    if (!std::isfinite(g(k).real()) || !std::isfinite(g(k).imag()))
      throw std::invalid_argument("laplace_inverse: non-finite entry at node " +
                                  std::to_string(k));
  const Eigen::VectorXd signs = checkerboard_signs(n);
  Eigen::VectorXcd dg(n);
  for (int k = 0; k < n; ++k) dg(k) = signs(k) * g(k);
  Eigen::VectorXcd out = op.fourier.apply_conjugate(dg);
  for (int j = 0; j < n; ++j) out(j) *= signs(j) / kSqrt2Pi;
  return out;
}

SampleVector causal_embed(const std::function<std::complex<double>(double)>& h,
                          const HermiteGrid& grid) {
  const int n = grid.order;
  SampleVector f = SampleVector::Zero(n);
  for (int j = 0; j < n; ++j) {
    const double t = grid.zeros(j);
    if (t < 0) continue;
    const std::complex<double> v = h(t);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("causal_embed: non-finite value at node " +
                                  std::to_string(j) + " (t = " + std::to_string(t) + ")");
    f(j) = v;
  }
  return f;
}

}  // namespace htrans
