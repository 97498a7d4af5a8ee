#include "htrans/reference.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "htrans/laplace.hpp"

namespace htrans {

namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// Lanczos g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool finite(const Complex& v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

}  // namespace

std::complex<double> complex_gamma(std::complex<double> z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw std::domain_error("complex_gamma: pole at nonpositive integer " +
                            std::to_string(static_cast<long>(z.real())));
  if (z.real() < 0.5)
    return kPi / (std::sin(kPi * z) * complex_gamma(1.0 - z));
  z -= 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
  const Complex t = z + 7.5;
  return std::sqrt(2 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

double relative_l2_error(const SampleVector& approx, const SampleVector& exact) {
  if (approx.size() != exact.size())
    throw std::invalid_argument("relative_l2_error: length mismatch");
  const double denom = exact.norm();
  if (denom == 0.0)
    throw std::invalid_argument("relative_l2_error: zero-norm reference");
  return (exact - approx).norm() / denom;
}

double trapezoid_area(const Eigen::VectorXd& nodes, const Eigen::VectorXd& values) {
  if (nodes.size() != values.size())
    throw std::invalid_argument("trapezoid_area: length mismatch");
  double area = 0.0;
  for (int j = 0; j + 1 < nodes.size(); ++j)
    area += (nodes(j + 1) - nodes(j)) * (values(j) + values(j + 1)) / 2;
  return area;
}

AnalyticPair delta_train_pair(int peaks) {
  AnalyticPair pair;
  pair.id = "ex1";
  pair.description = "two-sided Laplace transform of a train of " +
                     std::to_string(2 * peaks) + " unit impulses at the integers +-1..+-" +
                     std::to_string(peaks);
  pair.kind = TransformKind::TwoSidedLaplace;
  pair.delta_count = peaks;
  pair.transform_fn = [peaks](Complex s) {
    Complex sum = 0.0;
    for (int k = 1; k <= peaks; ++k) sum += 2.0 * std::cosh(double(k) * s);
    return sum;
  };
  pair.admissible_order = [peaks](int n) { return n > peaks * peaks / 2.0; };
  pair.admissibility_note = "order must exceed " + std::to_string(peaks) +
                            "^2/2 so the impulses lie inside the zero interval";
  return pair;
}

const AnalyticPair& builtin_pair(const std::string& id) {
  static const std::map<std::string, AnalyticPair> registry = [] {
    std::map<std::string, AnalyticPair> m;
    m["ex1"] = delta_train_pair(1);

    AnalyticPair ex2;
    ex2.id = "ex2";
    ex2.description = "one-sided Laplace pair exp(-t) sin(t) <-> 1/((s+1)^2+1)";
    ex2.kind = TransformKind::OneSidedLaplace;
    ex2.time_fn = [](double t) { return Complex(std::exp(-t) * std::sin(t), 0.0); };
    ex2.transform_fn = [](Complex s) { return 1.0 / ((s + 1.0) * (s + 1.0) + 1.0); };
    ex2.admissible_order = [](int) { return true; };
    m["ex2"] = ex2;

    AnalyticPair ex3;
    ex3.id = "ex3";
    ex3.description =
        "Mellin pair sqrt(x)/(1-x) <-> -pi tan(pi s), Cauchy principal value";
    ex3.kind = TransformKind::Mellin;
    ex3.time_fn = [](double x) { return Complex(std::sqrt(x) / (1.0 - x), 0.0); };
    ex3.transform_fn = [](Complex s) { return -kPi * std::tan(kPi * s); };
    ex3.admissible_order = [](int n) { return n % 2 == 0; };
    ex3.admissibility_note = "even order required: odd orders place a node at x = 1";
    m["ex3"] = ex3;

    AnalyticPair ex4;
    ex4.id = "ex4";
    ex4.description = "Mellin pair exp(-x/sqrt2) sin(x/sqrt2) <-> sin(pi s/4) Gamma(s)";
    ex4.kind = TransformKind::Mellin;
    ex4.time_fn = [](double x) {
      return Complex(std::exp(-x / std::numbers::sqrt2) * std::sin(x / std::numbers::sqrt2),
                     0.0);
    };
    ex4.transform_fn = [](Complex s) {
      // removable singularity at s = 0: sin(pi s/4) Gamma(s) -> pi/4
      if (s == Complex(0.0, 0.0)) return Complex(kPi / 4, 0.0);
      return std::sin(kPi * s / 4.0) * complex_gamma(s);
    };
    ex4.admissible_order = [](int) { return true; };
    m["ex4"] = ex4;
    return m;
  }();
  auto it = registry.find(id);
  if (it == registry.end())
    throw std::invalid_argument("builtin_pair: unknown id '" + id + "'");
  return it->second;
}

std::vector<std::string> builtin_pair_ids() { return {"ex1", "ex2", "ex3", "ex4"}; }

SampleVector evaluate_pair(const AnalyticPair& pair, PairSide side, const HermiteGrid& grid) {
  if (!pair.admissible_order(grid.order))
    throw std::invalid_argument("evaluate_pair: order " + std::to_string(grid.order) +
                                " inadmissible for " + pair.id +
                                (pair.admissibility_note.empty()
                                     ? ""
                                     : " (" + pair.admissibility_note + ")"));
  const int n = grid.order;
  SampleVector out(n);

  if (side == PairSide::TransformDomain) {
    for (int k = 0; k < n; ++k) {
      out(k) = pair.transform_fn(Complex(0.0, grid.zeros(k)));
      if (!finite(out(k)))
        throw std::invalid_argument("evaluate_pair: transform singular at node " +
                                    std::to_string(k));
    }
    return out;
  }

  if (pair.delta_count > 0)
    throw std::invalid_argument(
        "evaluate_pair: the delta-train pair has no pointwise time-domain values; "
        "its exact side is the area criterion");

  switch (pair.kind) {
    case TransformKind::OneSidedLaplace:
      return causal_embed(pair.time_fn, grid);
    case TransformKind::Mellin:
      for (int j = 0; j < n; ++j) {
        out(j) = pair.time_fn(std::exp(-grid.zeros(j)));
        if (!finite(out(j)))
          throw std::invalid_argument("evaluate_pair: function singular at node " +
                                      std::to_string(j));
      }
      return out;
    case TransformKind::TwoSidedLaplace:
      for (int j = 0; j < n; ++j) {
        out(j) = pair.time_fn(grid.zeros(j));
        if (!finite(out(j)))
          throw std::invalid_argument("evaluate_pair: function singular at node " +
                                      std::to_string(j));
      }
      return out;
  }
  throw std::logic_error("evaluate_pair: unreachable");
}

}  // namespace htrans
