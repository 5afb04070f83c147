#include "lbverify/congruence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lbverify/errors.hpp"
#include "lbverify/numerics.hpp"
#include "lbverify/special_functions.hpp"

namespace lb::congruence {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kRoundoff = 64.0 * std::numeric_limits<double>::epsilon();

[[noreturn]] void forbidden(double r, double w, double e2) {
  std::ostringstream os;
  os.precision(17);
  os << "forbidden region at r = " << r << ": w = " << w << " exceeds E~^2 = " << e2;
  throw DomainError(os.str());
}

// E~^2 - w, or throws in the forbidden region; sets `turning` inside the guard band.
double gap(double r, double w, double e2, bool& turning) {
  const double d = e2 - w;
  turning = std::abs(d) < kTurningBand * e2;
  if (d < 0.0 && !turning) forbidden(r, w, e2);
  return std::max(d, 0.0);
}

double softplus(double s) { return s > 0.0 ? s + std::log1p(std::exp(-s)) : std::log1p(std::exp(s)); }

// log w without overflow of the intermediate exponentials.
double log_w(const SolutionParams& p, double r) {
  const double base = -2.0 * r / p.a;
  if (p.xi == 0.0) return base;
  return base + 2.0 / 3.0 * softplus(std::log(p.xi * p.xi) + 6.0 * r / p.a);
}

double bracket_root(const SolutionParams& p, double target, double from, double dir) {
  auto g = [&](double r) { return log_w(p, r) - target; };
  const double limit = radial_bound(p.lambda);
  double step = p.a;
  double near = from;
  double far = from + dir * step;
  while (g(far) < 0.0) {
    near = far;
    step *= 2.0;
    far = from + dir * step;
    if (std::abs(far) > limit) throw RangeError("w(r) = X root lies beyond the radial bound", limit);
  }
  return numerics::bisect(g, std::min(near, far), std::max(near, far));
}

}  // namespace

CongruenceConfig make_config(double e_tilde, Direction direction) {
  if (!std::isfinite(e_tilde) || std::abs(e_tilde) < 1.0) {
    throw ParameterError("the conserved energy must satisfy |E~| >= 1");
  }
  return {e_tilde, direction};
}

FourVelocity four_velocity(const SolutionParams& p, const CongruenceConfig& cfg, double r) {
  const double w = metric_eval(p, r).w;
  const double e2 = cfg.e_tilde * cfg.e_tilde;
  FourVelocity fv;
  const double d = gap(r, w, e2, fv.turning_point);
  const double ur = fv.turning_point ? 0.0 : sign_of(cfg.direction) * std::sqrt(d / w);
  fv.u = {cfg.e_tilde / w, ur, 0.0, 0.0};
  return fv;
}

double norm(const SolutionParams& p, const FourVelocity& u, double r) {
  const double w = metric_eval(p, r).w;
  return -w * u.u[0] * u.u[0] + u.u[1] * u.u[1] + w * (u.u[2] * u.u[2] + u.u[3] * u.u[3]);
}

double hypersurface_potential(const SolutionParams& p, const CongruenceConfig& cfg, double r0,
                              double r1) {
  if (r0 == r1) return 0.0;
  const double e2 = cfg.e_tilde * cfg.e_tilde;
  auto integrand = [&](double r) {
    const double w = metric_eval(p, r).w;
    bool turning = false;
    const double d = gap(r, w, e2, turning);
    return std::sqrt(d / w);
  };
  auto is_turning = [&](double r) {
    const double w = metric_eval(p, r).w;
    return std::abs(e2 - w) <= 1e-8 * e2;
  };
  const bool lo_tp = is_turning(r0);
  const bool hi_tp = is_turning(r1);
  // r = r0 + (r1 - r0) m(s) with m' vanishing at turning-point ends.
  auto map = [&](double s) -> std::pair<double, double> {
    if (lo_tp && hi_tp) return {s * s * (3.0 - 2.0 * s), 6.0 * s * (1.0 - s)};
    if (lo_tp) return {s * s, 2.0 * s};
    if (hi_tp) return {1.0 - (1.0 - s) * (1.0 - s), 2.0 * (1.0 - s)};
    return {s, 1.0};
  };
  const double span = r1 - r0;
  const double integral = numerics::adaptive_simpson(
      [&](double s) {
        const auto [m, dm] = map(s);
        return dm == 0.0 ? 0.0 : integrand(r0 + span * m) * dm * span;
      },
      0.0, 1.0, 1e-12, 60);
  return -sign_of(cfg.direction) * integral;
}

Flagged expansion_timelike(const SolutionParams& p, const CongruenceConfig& cfg, double r) {
  const auto s = metric_eval(p, r);
  const double e2 = cfg.e_tilde * cfg.e_tilde;
  bool turning = false;
  const double d = gap(r, s.w, e2, turning);
  if (turning) return {kNaN, true};
  const double sd = std::sqrt(d);
  const double q_p = s.w_p * sd - s.w * s.w_p / (2.0 * sd);
  return {sign_of(cfg.direction) * std::pow(s.w, -1.5) * q_p, false};
}

Flagged dtheta_dtau_direct(const SolutionParams& p, const CongruenceConfig& cfg, double r) {
  const auto s = metric_eval(p, r);
  const double e2 = cfg.e_tilde * cfg.e_tilde;
  bool turning = false;
  const double d = gap(r, s.w, e2, turning);
  if (turning) return {kNaN, true};
  const double w = s.w, w1 = s.w_p, w2 = s.w_pp;
  const double sd = std::sqrt(d);
  const double q_p = w1 * sd - w * w1 / (2.0 * sd);
  const double q_pp = w2 * sd - w1 * w1 / (2.0 * sd) - (w1 * w1 + w * w2) / (2.0 * sd) -
                      w * w1 * w1 / (4.0 * d * sd);
  const double dtheta_dr = -1.5 * std::pow(w, -2.5) * w1 * q_p + std::pow(w, -1.5) * q_pp;
  return {std::sqrt(d / w) * dtheta_dr, false};
}

KinematicsSample timelike_sample(const SolutionParams& p, const CongruenceConfig& cfg, double r) {
  const auto theta = expansion_timelike(p, cfg, r);
  const auto rate = dtheta_dtau_direct(p, cfg, r);
  return {r, theta.value, rate.value, Channel::Timelike, theta.divergent || rate.divergent};
}

FocusingVars focusing_vars(const SolutionParams& p, const CongruenceConfig& cfg, double r) {
  FocusingVars v;
  const double e2 = cfg.e_tilde * cfg.e_tilde;
  v.x = metric_eval(p, r).w / e2;
  v.b = std::abs(p.xi / cfg.e_tilde);
  const double y2 = std::pow(v.x, 6) - 4.0 * v.b * v.b * std::pow(v.x, 3);
  v.y = y2 > 0.0 ? std::sqrt(y2) : (y2 < 0.0 ? kNaN : 0.0);
  v.a = p.a;
  return v;
}

double phi_b_eval(double x, double b) {
  const double x2 = x * x, x3 = x2 * x, x4 = x3 * x, x5 = x4 * x, x6 = x5 * x;
  const double b2 = b * b;
  double y2 = x6 - 4.0 * b2 * x3;
  if (y2 < 0.0) {
    if (-y2 > kRoundoff * std::max(x6, 4.0 * b2 * std::abs(x3))) {
      std::ostringstream os;
      os.precision(17);
      os << "Phi_b: y^2 = x^6 - 4 b^2 x^3 < 0 at x = " << x << ", b = " << b;
      throw DomainError(os.str());
    }
    y2 = 0.0;
  }
  const double y = std::sqrt(y2);
  const double den = 3.0 * (x3 + y);
  if (den == 0.0) throw DomainError("Phi_b: pole at x^3 + y = 0");
  const double num = (27.0 * x2 - 45.0 * x + 20.0) * y - 36.0 * b2 * x2 - 46.0 * x4 + 27.0 * x5 +
                     64.0 * b2 * x + 20.0 * x3 - 32.0 * b2;
  return num / den;
}

QuadraticReduction phi_0_reduction() {
  QuadraticReduction q;
  const auto [a2, a1, a0] = q.coefficients;
  q.discriminant = a1 * a1 - 4.0 * a2 * a0;
  if (q.discriminant >= 0.0) {
    const double sq = std::sqrt(q.discriminant);
    q.real_roots = {(-a1 - sq) / (2.0 * a2), (-a1 + sq) / (2.0 * a2)};
  }
  return q;
}

PrintedRate dtheta_dtau_printed(const SolutionParams& p, const CongruenceConfig& cfg, double r) {
  PrintedRate out;
  const auto direct = dtheta_dtau_direct(p, cfg, r);
  const auto v = focusing_vars(p, cfg, r);
  if (direct.divergent || v.x == 1.0) {
    out.printed = out.direct = out.difference = kNaN;
    out.divergent = true;
    return out;
  }
  out.printed = 0.5 * p.lambda * phi_b_eval(v.x, v.b) / (v.x * (1.0 - v.x));
  out.direct = direct.value;
  out.difference = out.printed - out.direct;
  return out;
}

PhiBRoots phi_b_roots(double b, std::size_t brackets) {
  if (!(b >= 0.0 && b <= 0.5)) throw ParameterError("phi_b_roots needs 0 <= b <= 1/2");
  if (brackets < 2) throw ParameterError("phi_b_roots needs at least 2 brackets");
  constexpr double kZero = 1e-12;
  PhiBRoots out;
  out.b = b;
  out.x_lo = std::cbrt(4.0 * b * b);
  out.x_hi = 1.0;
  if (b == 0.0) out.reduction = phi_0_reduction();

  auto eval = [b](double x) -> std::optional<double> {
    try {
      return phi_b_eval(x, b);
    } catch (const DomainError&) {
      return std::nullopt;
    }
  };
  const auto f_lo = eval(out.x_lo);
  const auto f_hi = eval(out.x_hi);
  if (f_lo && std::abs(*f_lo) <= kZero) out.boundary.push_back(out.x_lo);
  if (f_hi && std::abs(*f_hi) <= kZero && out.x_hi != out.x_lo) out.boundary.push_back(out.x_hi);
  if (!(out.x_hi > out.x_lo)) return out;

  const auto xs = numerics::linspace(out.x_lo, out.x_hi, brackets + 1);
  std::optional<double> prev;
  double prev_x = 0.0;
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    const auto cur = eval(xs[i]);
    if (!cur) {
      prev.reset();
      continue;
    }
    if (*cur == 0.0) {
      out.interior.push_back(xs[i]);
    } else if (prev && *prev != 0.0 && (*prev > 0.0) != (*cur > 0.0)) {
      out.interior.push_back(numerics::bisect([b](double x) { return phi_b_eval(x, b); }, prev_x, xs[i]));
    }
    prev = cur;
    prev_x = xs[i];
  }
  return out;
}

PhiBSignMap phi_b_sign_map(double b, std::size_t points) {
  if (!(b >= 0.0 && b < 0.5)) throw ParameterError("phi_b_sign_map needs 0 <= b < 1/2");
  PhiBSignMap map;
  map.b = b;
  map.points = points;
  const double lo = std::cbrt(4.0 * b * b);
  const double h = (1.0 - lo) / static_cast<double>(points);
  map.max_value = -std::numeric_limits<double>::infinity();
  map.min_value = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < points; ++k) {
    const double x = lo + (static_cast<double>(k) + 0.5) * h;
    const double v = phi_b_eval(x, b);
    map.max_value = std::max(map.max_value, v);
    map.min_value = std::min(map.min_value, v);
    if (v > 0.0) {
      ++map.positive;
      map.positive_x.push_back(x);
    } else if (v < 0.0) {
      ++map.negative;
    } else {
      ++map.zero;
    }
  }
  return map;
}

RadiusCandidates radius_from_root(const SolutionParams& p, double x_value) {
  if (!(x_value > 0.0)) throw ParameterError("radius_from_root needs X > 0");
  RadiusCandidates out;
  out.exp_channel = p.a / 6.0 * std::log(x_value);
  const double target = std::log(x_value);
  if (p.xi == 0.0) {
    // log w = -2r/a is strictly decreasing: one root.
    auto g = [&](double r) { return log_w(p, r) - target; };
    double lo = -p.a, hi = p.a;
    const double limit = radial_bound(p.lambda);
    while (g(lo) < 0.0 && std::abs(lo) <= limit) lo *= 2.0;
    while (g(hi) > 0.0 && std::abs(hi) <= limit) hi *= 2.0;
    if (g(lo) >= 0.0 && g(hi) <= 0.0) out.w_channel.push_back(numerics::bisect(g, lo, hi));
    return out;
  }
  const double r_min = w_minimum_radius(p);
  const double lw_min = log_w(p, r_min);
  if (target < lw_min) return out;
  if (target == lw_min) {
    out.w_channel.push_back(r_min);
    return out;
  }
  out.w_channel.push_back(bracket_root(p, target, r_min, -1.0));
  out.w_channel.push_back(bracket_root(p, target, r_min, +1.0));
  return out;
}

double tortoise(const SolutionParams& p, double r) {
  const double bound = radial_bound(p.lambda);
  if (!(std::abs(r) <= bound)) throw RangeError("tortoise: r beyond the radial bound", bound);
  const double z = -p.xi * p.xi * std::exp(6.0 * r / p.a);
  const double f = special::gauss_2f1({1.0 / 6.0, 1.0 / 3.0, 7.0 / 6.0, z});
  return p.a * std::exp(r / p.a) * f;
}

double tortoise_quadrature(const SolutionParams& p, double r) {
  const double xi2 = p.xi * p.xi;
  const double at_zero = p.a * numerics::adaptive_simpson(
                                   [xi2](double t) { return std::cbrt(1.0 / (1.0 + xi2 * std::pow(t, 6))); },
                                   0.0, 1.0, 1e-13, 60);
  const double rest = numerics::adaptive_simpson(
      [&](double s) { return 1.0 / std::sqrt(metric_eval(p, s).w); }, 0.0, r, 1e-12, 60);
  return at_zero + rest;
}

NullRate null_rate_from(double w, double w_p, double w_pp, double e_tilde) {
  const double e2 = e_tilde * e_tilde;
  const double d = e2 - w;
  if (d < 0.0 && std::abs(d) >= kTurningBand * e2) forbidden(kNaN, w, e2);
  const double bracket = w_pp - 1.5 * w_p * w_p / w;
  return {std::sqrt(std::max(d, 0.0)) / w * bracket, bracket};
}

NullRate null_rate(const SolutionParams& p, const CongruenceConfig& cfg, double r) {
  const auto s = metric_eval(p, r);
  const double e2 = cfg.e_tilde * cfg.e_tilde;
  bool turning = false;
  gap(r, s.w, e2, turning);
  return null_rate_from(s.w, s.w_p, s.w_pp, cfg.e_tilde);
}

}  // namespace lb::congruence
