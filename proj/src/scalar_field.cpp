#include "lbverify/scalar_field.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "lbverify/errors.hpp"
#include "lbverify/numerics.hpp"

namespace lb {

namespace {

constexpr double kRoundoff = 64.0 * std::numeric_limits<double>::epsilon();

std::string interval_text(double r0, double r1) {
  std::ostringstream os;
  os.precision(17);
  os << "[" << r0 << ", " << r1 << "]";
  return os.str();
}

}  // namespace

PhiPrimeSq phi_prime_sq_constraint(const MetricSample& s, double lambda) {
  double sum_pp = 0.0, sum_p2 = 0.0, scale = 4.0 * lambda;
  for (int i = 0; i < 3; ++i) {
    sum_pp += s.u_pp[i];
    sum_p2 += s.u_p[i] * s.u_p[i];
    scale += 2.0 * std::abs(s.u_pp[i]) + s.u_p[i] * s.u_p[i];
  }
  const double v = (2.0 * sum_pp + sum_p2 - 4.0 * lambda) / 4.0;
  if (std::abs(v) <= kRoundoff * scale) return {0.0, false};
  return {v, v < 0.0};
}

double phi_prime_sq_printed(const MetricSample& s, double lambda) {
  return 2.0 * (lambda - s.f_p * s.f_p);
}

double phi_prime(const SolutionParams& p, double r) {
  const auto sq = phi_prime_sq_constraint(metric_eval(p, r), p.lambda);
  if (sq.negative) {
    std::ostringstream os;
    os.precision(17);
    os << "phi'^2 = " << sq.value << " < 0 at r = " << r;
    throw DomainError(os.str());
  }
  return p.phi_branch * std::sqrt(sq.value);
}

double phi_accumulate(const SolutionParams& p, double r0, double r1) {
  if (r0 == r1) return 0.0;
  try {
    return numerics::adaptive_simpson([&](double r) { return phi_prime(p, r); }, r0, r1, 1e-10, 60);
  } catch (const DomainError& e) {
    throw DomainError(std::string(e.what()) + " on interval " + interval_text(r0, r1));
  }
}

double noether_charge(const SolutionParams& p, double r) {
  return std::exp(f_eval(p, r).f) * phi_prime(p, r);
}

ScalarProfile scalar_profile(const SolutionParams& p, std::span<const double> grid) {
  ScalarProfile out;
  out.r.assign(grid.begin(), grid.end());
  double phi = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto s = metric_eval(p, grid[i]);
    const auto sq = phi_prime_sq_constraint(s, p.lambda);
    out.phi_p_sq_constraint.push_back(sq.value);
    out.phi_p_sq_printed.push_back(phi_prime_sq_printed(s, p.lambda));
    if (i > 0) phi += phi_accumulate(p, grid[i - 1], grid[i]);
    out.phi.push_back(phi);
    out.noether.push_back(noether_charge(p, grid[i]));
  }
  return out;
}

}  // namespace lb
