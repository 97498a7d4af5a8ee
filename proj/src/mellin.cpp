#include "htrans/mellin.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace htrans {

MellinNodes mellin_nodes(const HermiteGrid& grid) {
  MellinNodes nodes;
  nodes.grid = grid;
  nodes.abscissae.resize(grid.order);
  for (int j = 0; j < grid.order; ++j) nodes.abscissae(j) = std::exp(-grid.zeros(j));
  return nodes;
}

SampleVector mellin_forward(const LaplaceOperator& op,
                            const std::function<std::complex<double>(double)>& f) {
  const MellinNodes nodes = mellin_nodes(op.grid());
  SampleVector ft(op.order());
  for (int j = 0; j < op.order(); ++j) {
    const std::complex<double> v = f(nodes.abscissae(j));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument(
          "mellin_forward: non-finite sample at node " + std::to_string(j) +
          " (x = " + std::to_string(nodes.abscissae(j)) + ")");
    ft(j) = v;
  }
  return laplace_forward(op, ft);
}

SampleVector mellin_forward(const LaplaceOperator& op, const SampleVector& space_samples) {
  if (space_samples.size() != op.order())
    throw std::invalid_argument("mellin_forward: grid mismatch");
  for (int j = 0; j < op.order(); ++j)
    if (!std::isfinite(space_samples(j).real()) || !std::isfinite(space_samples(j).imag()))
      throw std::invalid_argument("mellin_forward: non-finite sample at node " +
                                  std::to_string(j));
  return laplace_forward(op, space_samples);
}

SampleVector mellin_inverse(const LaplaceOperator& op, const SampleVector& g) {
  return laplace_inverse(op, g);
}

}  // namespace htrans
