#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "lbverify/report.hpp"

namespace lb {

/// The two physical parameters of the family plus derived quantities.
struct SolutionParams {
  double lambda = 3.0;  ///< cosmological constant, > 0
  double xi = 0.0;      ///< family parameter; only xi^2 enters the metric
  double a = 1.0;       ///< de Sitter length sqrt(3 / lambda)
  int phi_branch = +1;  ///< sign of the scalar-field branch
};

/// Integration constants of the general solution.
struct RawConstants {
  double c1 = 0.0;
  double c2 = -1.0;
  std::array<double, 3> beta{};
  std::array<double, 3> alpha{};
};

struct Solution {
  SolutionParams params;
  RawConstants constants;
};

/// Value and first two radial derivatives of f(r).
struct FValue {
  double f;
  double f_p;
  double f_pp;
};

/// Radial profile quantities at one r. `f` is (u1+u2+u3)/2; `w` is the conformal factor
/// of the (t, phi, z) block, equal to e^{u1} on the isotropic branch.
struct MetricSample {
  double r = 0.0;
  double f = 0.0, f_p = 0.0, f_pp = 0.0;
  std::array<double, 3> u{}, u_p{}, u_pp{};
  double w = 0.0, w_p = 0.0, w_pp = 0.0;
};

double de_sitter_radius(double lambda);

/// Validated params; throws ParameterError for lambda <= 0 or non-finite input.
SolutionParams make_params(double lambda, double xi, int phi_branch = +1);

/// Canonical gauge c2 = -1, c1 = xi^2, beta_j = -(2/3) log(-c2), alpha = 0.
Solution params_from_xi(double lambda, double xi, int phi_branch = +1);

RawConstants canonical_constants(const SolutionParams& p);

/// Largest |r| for which e^{2 sqrt(3 lambda) |r|} is finite.
double radial_bound(double lambda);

/// The closed form f(r) = -k r + 1/2 log((c1 e^{2kr} - c2)^2 / (12 lambda)), k = sqrt(3 lambda),
/// with analytic derivatives. Throws RangeError past radial_bound, DomainError where
/// c1 e^{2kr} = c2.
FValue f_eval(const RawConstants& c, double lambda, double r);
FValue f_eval(const SolutionParams& p, double r);

/// Isotropic metric functions u_i = (2/3) f + (1/3) log(12 lambda) + beta_j in the canonical gauge,
/// w = e^{-2r/a} (1 + xi^2 e^{6r/a})^{2/3}.
MetricSample metric_eval(const SolutionParams& p, double r);

/// General metric functions including the inverse-hyperbolic alpha deformation.
/// Throws DomainError when the tanh^{-1} argument leaves (-1, 1) or c2 = 0.
MetricSample metric_eval_raw(const RawConstants& c, double lambda, double r);

/// Radius of the interior minimum of w (xi != 0): r = -(a/3) log|xi|.
double w_minimum_radius(const SolutionParams& p);

/// Default scan window [-2a, 2a].
std::vector<double> default_grid(const SolutionParams& p, std::size_t samples = 4096);

/// Sum rules on the integration constants.
VerificationReport validate_constants(const RawConstants& c, double lambda);

}  // namespace lb
