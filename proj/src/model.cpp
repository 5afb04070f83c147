#include "lbverify/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lbverify/errors.hpp"
#include "lbverify/numerics.hpp"

namespace lb {

namespace {

constexpr double kSumTol = 1e-12;

double k_of(double lambda) { return std::sqrt(3.0 * lambda); }

void check_range(double lambda, double r) {
  const double bound = radial_bound(lambda);
  if (!(std::abs(r) <= bound)) {
    std::ostringstream os;
    os.precision(17);
    os << "exp(2 sqrt(3 lambda) r) overflows at r = " << r << "; |r| must not exceed " << bound;
    throw RangeError(os.str(), bound);
  }
}

// (1/sqrt(c1 c2)) atanh(sqrt(c1/c2) X) written as (X / c2) A(c1 X^2 / c2), continued to the
// real-xi branch through atanh(i y) = i atan(y).
double atanh_ratio(double s) {
  if (std::abs(s) < 1e-8) return 1.0 + s / 3.0 + s * s / 5.0;
  if (s > 0.0) {
    const double q = std::sqrt(s);
    return std::atanh(q) / q;
  }
  const double q = std::sqrt(-s);
  return std::atan(q) / q;
}

struct AlphaTerm {
  double h, h_p, h_pp;
};

AlphaTerm alpha_term(const RawConstants& c, double lambda, double r) {
  if (c.c2 == 0.0) throw DomainError("alpha deformation needs c2 != 0");
  const double k = k_of(lambda);
  const double x = std::exp(k * r);
  const double e = x * x;
  const double s = c.c1 / c.c2 * e;
  if (s >= 1.0) {
    std::ostringstream os;
    os.precision(17);
    os << "tanh^{-1} argument sqrt(c1/c2) e^{kr} >= 1 at r = " << r
       << "; admissible interval is r < " << -std::log(c.c1 / c.c2) / (2.0 * k);
    throw DomainError(os.str());
  }
  const double den = c.c2 - c.c1 * e;
  return {x / c.c2 * atanh_ratio(s), k * x / den, k * k * x * (c.c2 + c.c1 * e) / (den * den)};
}

}  // namespace

double de_sitter_radius(double lambda) { return std::sqrt(3.0 / lambda); }

SolutionParams make_params(double lambda, double xi, int phi_branch) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ParameterError("lambda must be finite and strictly positive");
  }
  if (!std::isfinite(xi)) throw ParameterError("xi must be finite");
  if (phi_branch != 1 && phi_branch != -1) throw ParameterError("phi_branch must be +1 or -1");
  return {lambda, xi, de_sitter_radius(lambda), phi_branch};
}

RawConstants canonical_constants(const SolutionParams& p) {
  RawConstants c;
  c.c2 = -1.0;
  c.c1 = p.xi * p.xi;
  const double beta = -2.0 / 3.0 * std::log(-c.c2);
  c.beta = {beta, beta, beta};
  c.alpha = {0.0, 0.0, 0.0};
  return c;
}

Solution params_from_xi(double lambda, double xi, int phi_branch) {
  const auto p = make_params(lambda, xi, phi_branch);
  return {p, canonical_constants(p)};
}

double radial_bound(double lambda) {
  return std::log(std::numeric_limits<double>::max()) / (2.0 * k_of(lambda));
}

FValue f_eval(const RawConstants& c, double lambda, double r) {
  check_range(lambda, r);
  const double k = k_of(lambda);
  const double e = std::exp(2.0 * k * r);
  const double num = c.c1 * e + c.c2;
  const double den = c.c1 * e - c.c2;
  if (den == 0.0) throw DomainError("f(r) is singular where c1 e^{2kr} = c2");
  const double f = -k * r + std::log(std::abs(den)) - 0.5 * std::log(12.0 * lambda);
  return {f, k * num / den, -4.0 * k * k * c.c1 * c.c2 * e / (den * den)};
}

FValue f_eval(const SolutionParams& p, double r) {
  check_range(p.lambda, r);
  // c2 = -1: the log argument is 1 + xi^2 e^{2kr}; log1p keeps the xi -> 0 limit exact.
  const double k = k_of(p.lambda);
  const double xi2 = p.xi * p.xi;
  const double e = std::exp(2.0 * k * r);
  const double den = xi2 * e + 1.0;
  const double f = -k * r + std::log1p(xi2 * e) - 0.5 * std::log(12.0 * p.lambda);
  return {f, k * (xi2 * e - 1.0) / den, 4.0 * k * k * xi2 * e / (den * den)};
}

MetricSample metric_eval(const SolutionParams& p, double r) {
  const FValue fv = f_eval(p, r);
  const RawConstants c = canonical_constants(p);
  const double shift = std::log(12.0 * p.lambda) / 3.0;
  MetricSample s;
  s.r = r;
  for (int i = 0; i < 3; ++i) {
    s.u[i] = 2.0 / 3.0 * fv.f + shift + c.beta[i];
    s.u_p[i] = 2.0 / 3.0 * fv.f_p;
    s.u_pp[i] = 2.0 / 3.0 * fv.f_pp;
  }
  s.f = 0.5 * (s.u[0] + s.u[1] + s.u[2]);
  s.f_p = fv.f_p;
  s.f_pp = fv.f_pp;
  s.w = std::exp(-2.0 * r / p.a) * std::pow(1.0 + p.xi * p.xi * std::exp(6.0 * r / p.a), 2.0 / 3.0);
  s.w_p = s.w * s.u_p[0];
  s.w_pp = s.w * (s.u_pp[0] + s.u_p[0] * s.u_p[0]);
  return s;
}

MetricSample metric_eval_raw(const RawConstants& c, double lambda, double r) {
  const FValue fv = f_eval(c, lambda, r);
  const double a = de_sitter_radius(lambda);
  const bool deformed = std::any_of(c.alpha.begin(), c.alpha.end(), [](double x) { return x != 0.0; });
  const AlphaTerm h = deformed ? alpha_term(c, lambda, r) : AlphaTerm{0.0, 0.0, 0.0};
  const double shift = std::log(12.0 * lambda) / 3.0;
  MetricSample s;
  s.r = r;
  for (int i = 0; i < 3; ++i) {
    const double coef = -c.alpha[i] * a / 3.0;
    s.u[i] = coef * h.h + 2.0 / 3.0 * fv.f + shift + c.beta[i];
    s.u_p[i] = coef * h.h_p + 2.0 / 3.0 * fv.f_p;
    s.u_pp[i] = coef * h.h_pp + 2.0 / 3.0 * fv.f_pp;
  }
  s.f = 0.5 * (s.u[0] + s.u[1] + s.u[2]);
  s.f_p = 0.5 * (s.u_p[0] + s.u_p[1] + s.u_p[2]);
  s.f_pp = 0.5 * (s.u_pp[0] + s.u_pp[1] + s.u_pp[2]);
  s.w = std::exp(s.u[0]);
  s.w_p = s.w * s.u_p[0];
  s.w_pp = s.w * (s.u_pp[0] + s.u_p[0] * s.u_p[0]);
  return s;
}

double w_minimum_radius(const SolutionParams& p) {
  if (p.xi == 0.0) throw DomainError("w has no interior minimum for xi = 0");
  return -p.a / 3.0 * std::log(std::abs(p.xi));
}

std::vector<double> default_grid(const SolutionParams& p, std::size_t samples) {
  return numerics::linspace(-2.0 * p.a, 2.0 * p.a, samples);
}

VerificationReport validate_constants(const RawConstants& c, double lambda) {
  VerificationReport rep;
  const std::string loc = "constants";
  const double alpha_sum = c.alpha[0] + c.alpha[1] + c.alpha[2];
  rep.check_at_most("alpha_sum", loc, std::abs(alpha_sum), kSumTol);

  double alpha_max = 0.0;
  for (double x : c.alpha) alpha_max = std::max(alpha_max, std::abs(x));
  rep.compare_claim("alpha_individually_zero", loc, alpha_max, kSumTol, alpha_max <= kSumTol);

  const double beta_sum = c.beta[0] + c.beta[1] + c.beta[2];
  const double printed = std::abs(beta_sum + 0.5 * std::log(12.0 * lambda));
  rep.compare_claim("beta_sum_printed", loc, printed, kSumTol, printed <= kSumTol);

  if (c.c2 < 0.0) {
    double gauge = 0.0;
    for (double b : c.beta) gauge = std::max(gauge, std::abs(b + 2.0 / 3.0 * std::log(-c.c2)));
    rep.compare_claim("beta_gauge_printed", loc, gauge, kSumTol, gauge <= kSumTol);
  }

  const double xi2 = c.c2 != 0.0 ? -c.c1 / c.c2 : std::numeric_limits<double>::quiet_NaN();
  rep.check_at_least("xi_squared_real_branch", loc, xi2, 0.0);
  return rep;
}

}  // namespace lb
