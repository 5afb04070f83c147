#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "lbverify/model.hpp"

namespace lb::curvature {

/// Ricci components here use R = -R_MTW (signature -+++). This is the convention under which
/// R_mu nu - lambda g_mu nu = phi_mu phi_nu reduces to 2u_i'' + u_i' Sum u_j' - 4 lambda = 0.
inline constexpr double kRicciSign = -1.0;

/// Coordinate components on the diagonal, order (t, r, phi, z).
struct DiagonalRicci {
  double tt = 0.0, rr = 0.0, pp = 0.0, zz = 0.0;
};

using Matrix4 = std::array<std::array<double, 4>, 4>;

/// Diagonal metric depending on r only: returns (g_tt, g_rr, g_phiphi, g_zz).
using DiagonalMetricFn = std::function<std::array<double, 4>(double)>;

/// Residual of R_mu nu - lambda g_mu nu - phi_,mu phi_,nu, coordinate components.
struct FieldResidual {
  double r = 0.0;
  double res_tt = 0.0, res_rr = 0.0, res_phiphi = 0.0, res_zz = 0.0;
  double max_abs = 0.0;
};

struct FPoint {
  double r, f, f_p;
};

struct ConvergenceStudy {
  std::vector<int> steps;
  std::vector<double> errors;
  double order = 0.0;  ///< least-squares slope of log(error) against log(step size)
  bool exact = false;  ///< every error at roundoff (linear f, xi = 0); order is NaN then
};

/// Closed-form Ricci for -e^{u1} dt^2 + dr^2 + e^{u2} dphi^2 + e^{u3} dz^2.
DiagonalRicci ricci_diagonal(const MetricSample& s);

/// Full Ricci tensor of an r-dependent diagonal metric from Christoffel symbols, with metric
/// derivatives taken by five-point central differences.
Matrix4 ricci_finite_difference(const DiagonalMetricFn& metric, double r);

/// The metric tensor implied by metric_eval.
DiagonalMetricFn metric_function(const SolutionParams& p);

/// Divergence of the vector field (v_t(r), v_r(r), 0, 0) in a static diagonal metric:
/// d_r V^r + Gamma^a_{a r} V^r, with the metric differentiated numerically.
double covariant_divergence(const DiagonalMetricFn& metric, const std::function<double(double)>& v_r,
                            double r);

FieldResidual field_residual_from_sample(const MetricSample& s, double lambda);

/// Field-equation residual with phi'^2 taken from the rr constraint.
FieldResidual field_residual(const SolutionParams& p, double r);

/// Fixed-step RK4 for f'' = 3 lambda - f'^2 from closed-form data at r0. steps >= 16.
/// Returns steps + 1 points (one point when r0 == r1).
std::vector<FPoint> ode_integrate_f(const SolutionParams& p, double r0, double r1, int steps);

/// Endpoint error of ode_integrate_f against f_eval for each step count.
ConvergenceStudy ode_convergence(const SolutionParams& p, double r0, double r1,
                                 std::span<const int> steps);

/// Field residual of the alpha-deformed metric. Sum(alpha) must vanish to 1e-12.
FieldResidual alpha_family_residual(const RawConstants& c, double lambda, double r);
FieldResidual alpha_family_residual(const SolutionParams& p, const std::array<double, 3>& alpha,
                                    double r);

}  // namespace lb::curvature
