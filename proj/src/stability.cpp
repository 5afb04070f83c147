#include "lbverify/stability.hpp"

#include <algorithm>
#include <cmath>

#include "lbverify/errors.hpp"
#include "lbverify/model.hpp"

namespace lb::stability {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Stable:
      return "stable";
    case Verdict::Unstable:
      return "unstable";
    case Verdict::Marginal:
      return "marginal";
  }
  return "marginal";
}

FixedPoint fixed_point(double lambda, int sign) {
  if (!(lambda > 0.0)) throw ParameterError("lambda must be strictly positive");
  const double x = sign * 2.0 / de_sitter_radius(lambda);
  FixedPoint fp;
  fp.x = {x, x, x};
  const double sum = 3.0 * x;
  double comp = 0.0;
  for (double xi : fp.x) comp = std::max(comp, std::abs(xi * sum - 4.0 * lambda));
  fp.per_component_residual = comp;
  fp.sum_squares_residual = std::abs(3.0 * x * x - 4.0 * lambda);
  const double tol = 1e-12 * std::max(1.0, 4.0 * lambda);
  fp.both_satisfied = comp <= tol && fp.sum_squares_residual <= tol;
  return fp;
}

Eigen::Matrix3d jacobian(const std::array<double, 3>& x) {
  const double sum = x[0] + x[1] + x[2];
  Eigen::Matrix3d j;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) j(i, k) = -0.5 * x[i] - (i == k ? 0.5 * sum : 0.0);
  return j;
}

StabilityReport jacobian_eigen(double lambda, int sign) {
  StabilityReport rep;
  rep.fixed_point = fixed_point(lambda, sign).x;
  rep.jacobian = jacobian(rep.fixed_point);
  Eigen::EigenSolver<Eigen::Matrix3d> solver(rep.jacobian, /*computeEigenvectors=*/false);
  const auto ev = solver.eigenvalues();
  for (int i = 0; i < 3; ++i) rep.eigenvalues[i] = ev(i);
  std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end(),
            [](const auto& l, const auto& r) { return l.real() < r.real(); });
  const double max_re = rep.eigenvalues.back().real();
  if (max_re < 0.0) {
    rep.verdict = Verdict::Stable;
  } else if (max_re > 0.0) {
    rep.verdict = Verdict::Unstable;
  } else {
    rep.verdict = Verdict::Marginal;
  }
  return rep;
}

double linearized_profile(double lambda, double c1, double r) { return 1.5 * lambda * r * r + c1; }

}  // namespace lb::stability
