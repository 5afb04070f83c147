#pragma once

#include <array>
#include <complex>
#include <string_view>

#include <Eigen/Dense>

namespace lb::stability {

enum class Verdict { Stable, Unstable, Marginal };

std::string_view to_string(Verdict v);

/// Stationary point of 2 x_i' + x_i Sum x_j - 4 lambda = 0 (x_i = u_i') together with the
/// residuals of both stationarity conditions.
struct FixedPoint {
  std::array<double, 3> x{};
  double per_component_residual = 0.0;  ///< max_i |x_i Sum x_j - 4 lambda|
  double sum_squares_residual = 0.0;    ///< |Sum x_j^2 - 4 lambda|
  bool both_satisfied = false;
};

struct StabilityReport {
  std::array<double, 3> fixed_point{};
  Eigen::Matrix3d jacobian;
  std::array<std::complex<double>, 3> eigenvalues{};  ///< sorted by real part, ascending
  Verdict verdict = Verdict::Marginal;
};

/// x_i = sign * 2/a. The branch sign = +1 is the attracting point.
FixedPoint fixed_point(double lambda, int sign = +1);

/// Linearisation d(dx_i)/dr = -(S/2) dx_i - (x_i/2) Sum dx_j at the fixed point.
Eigen::Matrix3d jacobian(const std::array<double, 3>& x);

StabilityReport jacobian_eigen(double lambda, int sign = +1);

/// (3 lambda / 2) r^2 + c1, the printed solution of the linearised f equation.
double linearized_profile(double lambda, double c1, double r);

}  // namespace lb::stability
