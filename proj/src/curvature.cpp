#include "lbverify/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lbverify/errors.hpp"
#include "lbverify/numerics.hpp"
#include "lbverify/scalar_field.hpp"

namespace lb::curvature {

namespace {

using Vec4 = std::array<double, 4>;
using Gamma = std::array<std::array<std::array<double, 4>, 4>, 4>;

constexpr int kR = 1;

// Optimal five-point steps for first and second derivatives.
const double kStep1 = std::pow(std::numeric_limits<double>::epsilon(), 1.0 / 5.0);
const double kStep2 = std::pow(std::numeric_limits<double>::epsilon(), 1.0 / 6.0);

struct MetricJet {
  Vec4 g, dg, d2g;
};

MetricJet metric_jet(const DiagonalMetricFn& metric, double r) {
  MetricJet jet;
  jet.g = metric(r);
  const double scale = std::max(1.0, std::abs(r));
  for (int i = 0; i < 4; ++i) {
    const numerics::ScalarFn gi = [&](double x) { return metric(x)[i]; };
    jet.dg[i] = numerics::d1_five_point(gi, r, kStep1 * scale);
    jet.d2g[i] = numerics::d2_five_point(gi, r, kStep2 * scale);
  }
  return jet;
}

// Gamma^a_{bc} of a diagonal metric depending on r only, and its r-derivative.
void christoffel(const MetricJet& j, Gamma& gam, Gamma& dgam) {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        // 1/2 g^{aa} (d_b g_ac + d_c g_ab - d_a g_bc)
        double num = 0.0, dnum = 0.0;
        if (b == kR && a == c) {
          num += j.dg[a];
          dnum += j.d2g[a];
        }
        if (c == kR && a == b) {
          num += j.dg[a];
          dnum += j.d2g[a];
        }
        if (a == kR && b == c) {
          num -= j.dg[b];
          dnum -= j.d2g[b];
        }
        const double inv = 1.0 / j.g[a];
        gam[a][b][c] = 0.5 * inv * num;
        dgam[a][b][c] = 0.5 * (inv * dnum - j.dg[a] * inv * inv * num);
      }
}

FieldResidual finish(double r, double tt, double rr, double pp, double zz) {
  FieldResidual res{r, tt, rr, pp, zz, 0.0};
  res.max_abs = std::max({std::abs(tt), std::abs(rr), std::abs(pp), std::abs(zz)});
  return res;
}

}  // namespace

DiagonalRicci ricci_diagonal(const MetricSample& s) {
  const double sum_p = s.u_p[0] + s.u_p[1] + s.u_p[2];
  double rr_mtw = 0.0;
  for (int i = 0; i < 3; ++i) rr_mtw -= 0.5 * s.u_pp[i] + 0.25 * s.u_p[i] * s.u_p[i];
  auto block = [&](int i) { return 0.25 * std::exp(s.u[i]) * (2.0 * s.u_pp[i] + s.u_p[i] * sum_p); };
  // MTW: R_tt = +e^{u1}/4 (...), R_ii = -e^{ui}/4 (...) for the spacelike directions.
  DiagonalRicci mtw{block(0), rr_mtw, -block(1), -block(2)};
  return {kRicciSign * mtw.tt, kRicciSign * mtw.rr, kRicciSign * mtw.pp, kRicciSign * mtw.zz};
}

Matrix4 ricci_finite_difference(const DiagonalMetricFn& metric, double r) {
  const MetricJet jet = metric_jet(metric, r);
  Gamma gam{}, dgam{};
  christoffel(jet, gam, dgam);
  Matrix4 ric{};
  for (int b = 0; b < 4; ++b)
    for (int d = 0; d < 4; ++d) {
      // R_bd = d_a G^a_bd - d_d G^a_ba + G^a_ae G^e_bd - G^a_de G^e_ba; only d_r is nonzero.
      double v = dgam[kR][b][d];
      if (d == kR) {
        for (int a = 0; a < 4; ++a) v -= dgam[a][b][a];
      }
      for (int a = 0; a < 4; ++a)
        for (int e = 0; e < 4; ++e) v += gam[a][a][e] * gam[e][b][d] - gam[a][d][e] * gam[e][b][a];
      ric[b][d] = kRicciSign * v;
    }
  return ric;
}

DiagonalMetricFn metric_function(const SolutionParams& p) {
  return [p](double r) {
    const auto s = metric_eval(p, r);
    return Vec4{-std::exp(s.u[0]), 1.0, std::exp(s.u[1]), std::exp(s.u[2])};
  };
}

double covariant_divergence(const DiagonalMetricFn& metric, const std::function<double(double)>& v_r,
                            double r) {
  const Vec4 g = metric(r);
  const double scale = std::max(1.0, std::abs(r));
  double trace_gamma = 0.0;
  for (int i = 0; i < 4; ++i) {
    const numerics::ScalarFn gi = [&](double x) { return metric(x)[i]; };
    trace_gamma += 0.5 * numerics::d1_five_point(gi, r, kStep1 * scale) / g[i];
  }
  return numerics::d1_five_point(v_r, r, kStep1 * scale) + trace_gamma * v_r(r);
}

FieldResidual field_residual_from_sample(const MetricSample& s, double lambda) {
  const DiagonalRicci ric = ricci_diagonal(s);
  const double phi_sq = phi_prime_sq_constraint(s, lambda).value;
  const double g_tt = -std::exp(s.u[0]);
  const double g_pp = std::exp(s.u[1]);
  const double g_zz = std::exp(s.u[2]);
  return finish(s.r, ric.tt - lambda * g_tt, ric.rr - lambda - phi_sq, ric.pp - lambda * g_pp,
                ric.zz - lambda * g_zz);
}

FieldResidual field_residual(const SolutionParams& p, double r) {
  return field_residual_from_sample(metric_eval(p, r), p.lambda);
}

std::vector<FPoint> ode_integrate_f(const SolutionParams& p, double r0, double r1, int steps) {
  if (steps < 16) throw ResolutionError("ode_integrate_f needs at least 16 steps");
  const FValue init = f_eval(p, r0);
  std::vector<FPoint> out{{r0, init.f, init.f_p}};
  if (r0 == r1) return out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  const double h = (r1 - r0) / steps;
  const double src = 3.0 * p.lambda;
  auto acc = [src](double fp) { return src - fp * fp; };
  double f = init.f, fp = init.f_p;
  for (int n = 0; n < steps; ++n) {
    const double k1f = fp, k1p = acc(fp);
    const double k2f = fp + 0.5 * h * k1p, k2p = acc(k2f);
    const double k3f = fp + 0.5 * h * k2p, k3p = acc(k3f);
    const double k4f = fp + h * k3p, k4p = acc(k4f);
    f += h / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
    fp += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    const double r = (n + 1 == steps) ? r1 : r0 + (n + 1) * h;
    out.push_back({r, f, fp});
  }
  return out;
}

ConvergenceStudy ode_convergence(const SolutionParams& p, double r0, double r1,
                                 std::span<const int> steps) {
  ConvergenceStudy study;
  const double exact = f_eval(p, r1).f;
  std::vector<double> log_h, log_e;
  for (int n : steps) {
    const double err = std::abs(ode_integrate_f(p, r0, r1, n).back().f - exact);
    study.steps.push_back(n);
    study.errors.push_back(err);
    log_h.push_back(std::log(std::abs(r1 - r0) / n));
    log_e.push_back(std::log(err));
  }
  const double scale = std::max(1.0, std::abs(exact));
  study.exact = *std::max_element(study.errors.begin(), study.errors.end()) <= 64.0 * std::numeric_limits<double>::epsilon() * scale;
  study.order = study.exact ? std::numeric_limits<double>::quiet_NaN() : numerics::fit_slope(log_h, log_e);
  return study;
}

FieldResidual alpha_family_residual(const RawConstants& c, double lambda, double r) {
  const double sum = c.alpha[0] + c.alpha[1] + c.alpha[2];
  if (std::abs(sum) > 1e-12) throw DomainError("alpha deformation must sum to zero");
  return field_residual_from_sample(metric_eval_raw(c, lambda, r), lambda);
}

FieldResidual alpha_family_residual(const SolutionParams& p, const std::array<double, 3>& alpha,
                                    double r) {
  RawConstants c = canonical_constants(p);
  c.alpha = alpha;
  return alpha_family_residual(c, p.lambda, r);
}

}  // namespace lb::curvature
