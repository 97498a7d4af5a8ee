#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "htrans/hermite.hpp"

namespace htrans {

// Gamma(z) by a Lanczos rational series with reflection for Re z < 1/2.
// Relative error below 1e-10 for |Im z| <= 10, Re z in [-5, 5]. Throws
// std::domain_error at the poles (nonpositive integers).
std::complex<double> complex_gamma(std::complex<double> z);

// ||exact - approx||_2 / ||exact||_2 over complex vectors. Throws on length
// mismatch or zero-norm reference.
double relative_l2_error(const SampleVector& approx, const SampleVector& exact);

// Area under the piecewise-linear interpolant of values over nodes.
double trapezoid_area(const Eigen::VectorXd& nodes, const Eigen::VectorXd& values);

enum class TransformKind { TwoSidedLaplace, OneSidedLaplace, Mellin };
enum class PairSide { TimeDomain, TransformDomain };

// An analytic test pair: a time/space-domain function and its transform.
// For the delta-train pair the time side has no pointwise values; its exact
// side is the area criterion (integral 2 per unit impulse).
struct AnalyticPair {
  std::string id;
  std::string description;
  TransformKind kind = TransformKind::TwoSidedLaplace;
  int delta_count = 0;  // > 0 marks the delta-train pair with that many peaks per side
  std::function<std::complex<double>(double)> time_fn;  // f(t), h(t) or f(x) per kind
  std::function<std::complex<double>(std::complex<double>)> transform_fn;
  std::function<bool(int)> admissible_order;
  std::string admissibility_note;
};

// Registry ids: ex1 (delta train, n = 1), ex2 (one-sided Laplace of
// exp(-t) sin t), ex3 (Mellin of sqrt(x)/(1-x), principal value), ex4
// (Mellin of exp(-x/sqrt 2) sin(x/sqrt 2)).
const AnalyticPair& builtin_pair(const std::string& id);
std::vector<std::string> builtin_pair_ids();
AnalyticPair delta_train_pair(int peaks);

// Exact values at the grid nodes: transform side at s_k = i t_k; time side
// as the transform input convention of the pair's kind (causal samples for
// one-sided Laplace, f(exp(-t_j)) for Mellin). Rejects inadmissible orders
// and singular nodes.
SampleVector evaluate_pair(const AnalyticPair& pair, PairSide side, const HermiteGrid& grid);

}  // namespace htrans
