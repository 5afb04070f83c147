#pragma once

#include <span>
#include <vector>

#include "lbverify/model.hpp"

namespace lb {

/// phi'^2 with a flag for values that would make the scalar field imaginary.
struct PhiPrimeSq {
  double value;
  bool negative;
};

/// Scalar-field profile over a grid.
struct ScalarProfile {
  std::vector<double> r;
  std::vector<double> phi_p_sq_constraint;
  std::vector<double> phi_p_sq_printed;
  std::vector<double> phi;      ///< accumulated from r.front(), branch-signed
  std::vector<double> noether;  ///< e^f phi'
};

/// phi'^2 = (2 Sum u_j'' + Sum u_j'^2 - 4 lambda) / 4, from the rr field equation.
/// Results within rounding of zero are returned as exactly 0.
PhiPrimeSq phi_prime_sq_constraint(const MetricSample& s, double lambda);

/// 2 (lambda - f'^2), the square of the integrand of the printed phi integral. May be negative.
double phi_prime_sq_printed(const MetricSample& s, double lambda);

/// phi_branch * sqrt(phi'^2). Throws DomainError on negative phi'^2.
double phi_prime(const SolutionParams& p, double r);

/// phi(r1) - phi(r0) by adaptive Simpson (abs tol 1e-10). Throws DomainError if phi'^2 < 0
/// anywhere on the interval.
double phi_accumulate(const SolutionParams& p, double r0, double r1);

/// J(r) = e^{f(r)} phi'(r) with f from the closed form; constant when the scalar equation holds.
double noether_charge(const SolutionParams& p, double r);

ScalarProfile scalar_profile(const SolutionParams& p, std::span<const double> grid);

}  // namespace lb
