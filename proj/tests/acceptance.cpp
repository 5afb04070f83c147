// One line per acceptance criterion; exit status 1 if any line fails.
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lbverify/congruence.hpp"
#include "lbverify/curvature.hpp"
#include "lbverify/energy_conditions.hpp"
#include "lbverify/numerics.hpp"
#include "lbverify/scalar_field.hpp"
#include "lbverify/special_functions.hpp"
#include "lbverify/stability.hpp"
#include "lbverify/suites.hpp"

using namespace lb;

namespace {

constexpr std::array<double, 3> kLambdas{0.75, 3.0, 12.0};
constexpr std::array<double, 5> kXis{0.0, 0.1, 0.5, 1.0, 2.0};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void line(int id, bool ok, const std::string& what) {
  std::printf("[%s] %2d %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

bool has_row(const VerificationReport& rep, const std::string& check, Verdict v) {
  for (const auto& r : rep.rows())
    if (r.check == check && r.verdict == v) return true;
  return false;
}

void c1_residuals() {
  const auto t0 = Clock::now();
  double f_max = 0.0, u_max = 0.0;
  for (double lambda : kLambdas)
    for (double xi : kXis) {
      const auto p = make_params(lambda, xi);
      for (double r : default_grid(p)) {
        const auto f = f_eval(p, r);
        f_max = std::max(f_max, std::abs(f.f_pp + f.f_p * f.f_p - 3.0 * lambda));
        const auto s = metric_eval(p, r);
        for (int i = 0; i < 3; ++i)
          u_max = std::max(u_max, std::abs(s.u_pp[i] + s.u_p[i] * s.f_p - 2.0 * lambda));
      }
    }
  const double t = seconds_since(t0);
  line(1, f_max < 1e-9 && u_max < 1e-8 && t < 1.0,
       "exact-solution residuals: f " + g(f_max) + " < 1e-9, u " + g(u_max) + " < 1e-8, " + g(t) + " s < 1 s");
}

void c2_field() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (double lambda : kLambdas)
    for (double xi : kXis) {
      const auto p = make_params(lambda, xi);
      for (double r : default_grid(p)) worst = std::max(worst, curvature::field_residual(p, r).max_abs);
    }
  const double t = seconds_since(t0);
  line(2, worst < 1e-8 && t < 5.0, "field-equation residual " + g(worst) + " < 1e-8, " + g(t) + " s < 5 s");
}

void c3_ode() {
  double err_max = 0.0, order_min = 1e300;
  const std::array<int, 5> steps{16, 32, 64, 128, 256};
  for (double lambda : kLambdas)
    for (double xi : kXis) {
      if (xi == 0.0) continue;  // f is linear there and RK4 is exact
      const auto p = make_params(lambda, xi);
      const double r1 = 2.0 * p.a;
      const auto traj = curvature::ode_integrate_f(p, 0.0, r1, 10000);
      err_max = std::max(err_max, std::abs(traj.back().f - f_eval(p, r1).f));
      order_min = std::min(order_min, curvature::ode_convergence(p, 0.0, r1, steps).order);
    }
  line(3, err_max < 1e-7 && order_min >= 3.5,
       "RK4 endpoint error " + g(err_max) + " < 1e-7, order " + g(order_min) + " >= 3.5");
}

void c4_scalar() {
  double noether = 0.0, sq_min = 1e300;
  bool report_ok = true;
  std::size_t discrepancy_rows = 0;
  for (double lambda : kLambdas)
    for (double xi : kXis) {
      const auto p = make_params(lambda, xi);
      const double j0 = noether_charge(p, 0.0);
      for (double r : default_grid(p)) {
        sq_min = std::min(sq_min, phi_prime_sq_constraint(metric_eval(p, r), lambda).value);
        if (xi != 0.0) noether = std::max(noether, std::abs(noether_charge(p, r) - j0) / std::abs(j0));
      }
    }
  const auto p = make_params(3.0, 1.0);
  const auto rep = suites::verify_suite(p, suites::default_window(p));
  for (const auto& r : rep.rows())
    if (r.check.rfind("printed_integrand_", 0) == 0) {
      if (r.verdict == Verdict::Fail) report_ok = false;
      if (r.verdict == Verdict::DiscrepancyLogged) ++discrepancy_rows;
    }
  report_ok = report_ok && discrepancy_rows > 0 && rep.internal_ok();
  line(4, noether < 1e-8 && sq_min >= 0.0 && report_ok,
       "Noether drift " + g(noether) + " < 1e-8, min phi'^2 " + g(sq_min) + " >= 0, printed-integrand report " +
           std::to_string(discrepancy_rows) + " discrepancy-logged rows");
}

void c5_stability() {
  double eig = 0.0, imag = 0.0, fp = 0.0;
  bool stable = true;
  for (double lambda : {0.75, 3.0, 12.0, 48.0}) {
    const double a = std::sqrt(3.0 / lambda);
    for (double x : stability::fixed_point(lambda).x) fp = std::max(fp, std::abs(x - 2.0 / a));
    const auto rep = stability::jacobian_eigen(lambda);
    const std::array<double, 3> expect{-6.0 / a, -3.0 / a, -3.0 / a};
    for (int i = 0; i < 3; ++i) {
      eig = std::max(eig, std::abs(rep.eigenvalues[i].real() - expect[i]));
      imag = std::max(imag, std::abs(rep.eigenvalues[i].imag()));
    }
    stable = stable && rep.verdict == stability::Verdict::Stable;
  }
  line(5, fp == 0.0 && eig < 1e-10 && imag < 1e-12 && stable,
       "fixed point error " + g(fp) + ", eigenvalue error " + g(eig) + " < 1e-10, imag " + g(imag) +
           " < 1e-12, verdict " + (stable ? "stable" : "not stable"));
}

void c6_energy() {
  double transverse = 0.0, sec = 0.0, radial = 0.0, radial_min = 1e300;
  for (double lambda : kLambdas)
    for (double xi : kXis) {
      const auto p = make_params(lambda, xi);
      for (double r : default_grid(p)) {
        const auto s = metric_eval(p, r);
        const auto m = energy::condition_margins(energy::stress_from_sample(s));
        transverse = std::max({transverse, std::abs(m.nec_phi), std::abs(m.nec_z)});
        sec = std::max(sec, std::abs(m.sec + 2.0 * lambda));
        radial = std::max(radial, std::abs(m.nec_r - phi_prime_sq_constraint(s, lambda).value));
        radial_min = std::min(radial_min, m.nec_r);
      }
    }
  line(6, transverse < 1e-9 && sec < 1e-8 && radial < 1e-9 && radial_min >= -1e-9,
       "rho+p_phi, rho+p_z " + g(transverse) + " < 1e-9; rho+Sum p + 2 lambda " + g(sec) + " < 1e-8; rho+p_r - phi'^2 " +
           g(radial) + " < 1e-9, min " + g(radial_min));
}

void c7_focusing() {
  bool ok = true;
  double chain = 0.0;
  std::string detail;
  for (double xi : {0.1, 1.0}) {
    const auto p = make_params(3.0, xi);
    const auto rep = suites::congruence_suite(p, congruence::make_config(2.0), suites::default_window(p));
    ok = ok && rep.internal_ok();
    const auto* c = rep.find("chain_rule_rate");
    ok = ok && c && c->verdict == Verdict::Pass && c->location.find("points=100") != std::string::npos;
    if (c) chain = std::max(chain, c->value);
    ok = ok && rep.find("printed_rate_vs_direct") && rep.find("phi_b_zero_reduction_identity") &&
         rep.find("phi_b_zero_reduction_identity")->verdict == Verdict::Pass;
    const auto* disc = rep.find("phi_0_discriminant");
    ok = ok && disc && disc->value == -359.0 && disc->verdict == Verdict::DiscrepancyLogged;
    std::size_t maps = 0;
    for (const auto& r : rep.rows()) maps += r.check == "phi_b_negative_claim";
    ok = ok && maps == 4 && has_row(rep, "phi_b_negative_claim", Verdict::DiscrepancyLogged) &&
         has_row(rep, "phi_b_claimed_root", Verdict::DiscrepancyLogged);
  }
  line(7, ok && chain < 1e-5,
       "chain rule rel error " + g(chain) + " < 1e-5 at 100 points; printed rate, b=0 reduction (disc -359), sign maps "
       "and claimed roots logged as discrepancies");
}

void c8_anchor() {
  const auto c = congruence::radius_from_root(make_params(3.0, 1.0), 1.178);
  line(8, std::abs(c.exp_channel - 0.0273) < 5e-4, "radius_from_root(1.178) r/a = " + g(c.exp_channel) + " vs 0.0273 within 5e-4");
}

void c9_tortoise() {
  double dual = 0.0, vac = 0.0, deriv = 0.0;
  for (double xi : {0.1, 0.5, 1.0}) {
    const auto p = make_params(3.0, xi);
    for (double r : numerics::linspace(-p.a, p.a, 401)) {
      dual = std::max(dual, std::abs(congruence::tortoise(p, r) - congruence::tortoise_quadrature(p, r)));
      const double h = 1e-4 * p.a;
      const double d = numerics::d1_five_point([&](double x) { return congruence::tortoise(p, x); }, r, h);
      deriv = std::max(deriv, std::abs(d * std::sqrt(metric_eval(p, r).w) - 1.0));
    }
  }
  for (double lambda : kLambdas) {
    const auto p = make_params(lambda, 0.0);
    for (double r : numerics::linspace(-p.a, p.a, 401)) {
      const double expect = p.a * std::exp(r / p.a);
      vac = std::max(vac, std::abs(congruence::tortoise(p, r) - expect) / expect);
    }
  }
  line(9, dual < 1e-8 && vac <= 4.0 * 2.220446049250313e-16 && deriv < 1e-6,
       "2F1 vs quadrature " + g(dual) + " < 1e-8; xi=0 rel " + g(vac) + " (rounding); dr*/dr sqrt(w) - 1 " + g(deriv) +
           " < 1e-6");
}

void c10_null() {
  double closed = 0.0;
  const auto cfg = congruence::make_config(2.0);
  for (double lambda : kLambdas) {
    const auto p = make_params(lambda, 0.0);
    for (double r : default_grid(p)) {
      const double w = metric_eval(p, r).w;
      if (w > 4.0) continue;
      closed = std::max(closed, std::abs(congruence::null_rate(p, cfg, r).rate + 2.0 / (p.a * p.a) * std::sqrt(4.0 - w)));
    }
  }
  const auto p = make_params(3.0, 1.0);
  const auto rep = suites::congruence_suite(p, cfg, suites::default_window(p));
  const auto* claim = rep.find("null_rate_negative_claim");
  std::size_t itemized = 0;
  for (const auto& r : rep.rows()) itemized += r.check == "null_rate_nonnegative_interval";
  const bool report_ok =
      claim && (claim->verdict == Verdict::Pass ? itemized == 0 : claim->verdict == Verdict::DiscrepancyLogged && itemized > 0);
  line(10, closed < 1e-9 && report_ok,
       "xi=0 closed form " + g(closed) + " < 1e-9; sign scan " + (claim ? std::string(to_string(claim->verdict)) : "missing") +
           " with " + std::to_string(itemized) + " nonnegative intervals itemized");
}

void c11_hypergeometric() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> par(-2.0, 3.0), zz(-10.0, 0.0);
  double power = 0.0;
  for (int i = 0; i < 100;) {
    const double a = par(rng), b = par(rng), z = zz(rng);
    if (a <= 0.0 && std::abs(a - std::round(a)) < 1e-3) continue;
    ++i;
    const double expect = std::pow(1.0 - z, -b);
    power = std::max(power, std::abs(special::gauss_2f1({a, b, a, z}) - expect) / std::max(1.0, std::abs(expect)));
  }
  double dual = 0.0;
  std::uniform_real_distribution<double> small(-0.95, 0.0), cpar(0.5, 3.0);
  for (int i = 0; i < 100; ++i) {
    const special::HypergeometricQuery q{par(rng), par(rng), cpar(rng), small(rng)};
    const double s = special::gauss_2f1_via(q, special::Hyp2F1Path::Series);
    const double scale = std::max(1.0, std::abs(s));
    dual = std::max({dual, std::abs(special::gauss_2f1_via(q, special::Hyp2F1Path::PfaffA) - s) / scale,
                     std::abs(special::gauss_2f1_via(q, special::Hyp2F1Path::PfaffB) - s) / scale});
  }
  line(11, power < 1e-12 && dual < 1e-12, "F(a,b;a;z) vs (1-z)^-b " + g(power) + " < 1e-12; series vs Pfaff " + g(dual) + " < 1e-12");
}

struct Spawned {
  int code;
  std::string out;
};

Spawned spawn(const std::string& args) {
  const std::string cmd = std::string("\"") + LBVERIFY_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void c12_cli() {
  const auto t0 = Clock::now();
  const auto first = spawn("verify");
  const double t = seconds_since(t0);
  const auto second = spawn("verify");
  const auto bad = spawn("verify --lambda -1 --xi 1");
  const bool identical = first.out == second.out && !first.out.empty();
  line(12, first.code == 0 && t < 10.0 && identical && bad.code == 2,
       "verify exit " + std::to_string(first.code) + " in " + g(t) + " s < 10 s; repeat " +
           (identical ? "byte-identical" : "differs") + "; invalid parameters exit " + std::to_string(bad.code));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{c1_residuals, c2_field,  c3_ode,   c4_scalar,
                                                    c5_stability, c6_energy, c7_focusing, c8_anchor,
                                                    c9_tortoise,  c10_null,  c11_hypergeometric, c12_cli};
  for (const auto& c : criteria) {
    try {
      c();
    } catch (const std::exception& e) {
      std::printf("[FAIL] criterion threw: %s\n", e.what());
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
