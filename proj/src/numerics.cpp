#include "lbverify/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace lb::numerics {

namespace {

double simpson_step(const ScalarFn& f, double a, double fa, double b, double fb, double whole,
                    double m, double fm, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, fa, m, fm, left, lm, flm, 0.5 * tol, depth - 1) +
         simpson_step(f, m, fm, b, fb, right, rm, frm, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const ScalarFn& f, double a, double b, double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  if (b < a) return -adaptive_simpson(f, b, a, abs_tol, max_depth);
  // A single Simpson panel can be fooled by symmetric integrands; start from 8 panels.
  constexpr int kPanels = 8;
  const double h = (b - a) / kPanels;
  double total = 0.0;
  for (int i = 0; i < kPanels; ++i) {
    const double lo = a + i * h;
    const double hi = (i + 1 == kPanels) ? b : lo + h;
    const double mid = 0.5 * (lo + hi);
    const double flo = f(lo);
    const double fhi = f(hi);
    const double fmid = f(mid);
    const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    total += simpson_step(f, lo, flo, hi, fhi, whole, mid, fmid, abs_tol / kPanels, max_depth);
  }
  return total;
}

double midpoint_rule(const ScalarFn& f, double a, double b, std::size_t n) {
  if (n == 0) throw std::invalid_argument("midpoint_rule: n must be positive");
  const double h = (b - a) / static_cast<double>(n);
  // Kahan summation; n can be 1e6.
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double y = f(a + (static_cast<double>(i) + 0.5) * h) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum * h;
}

double bisect(const ScalarFn& f, double lo, double hi, double x_tol, int max_iter) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw std::invalid_argument("bisect: interval does not bracket a sign change");
  }
  for (int i = 0; i < max_iter && std::abs(hi - lo) > x_tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> scan_roots(const ScalarFn& f, double lo, double hi, std::size_t samples) {
  std::vector<double> roots;
  if (samples == 0 || !(hi > lo)) return roots;
  const auto xs = linspace(lo, hi, samples + 1);
  double prev = f(xs.front());
  if (prev == 0.0) roots.push_back(xs.front());
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double cur = f(xs[i]);
    if (cur == 0.0) {
      roots.push_back(xs[i]);
    } else if (prev != 0.0 && (prev > 0.0) != (cur > 0.0)) {
      roots.push_back(bisect(f, xs[i - 1], xs[i]));
    }
    prev = cur;
  }
  return roots;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> xs;
  if (n == 0) return xs;
  xs.reserve(n);
  if (n == 1) {
    xs.push_back(lo);
    return xs;
  }
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) xs.push_back(lo + static_cast<double>(i) * step);
  xs.back() = hi;
  return xs;
}

double d1_five_point(const ScalarFn& f, double x, double h) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

double d2_five_point(const ScalarFn& f, double x, double h) {
  return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) - f(x + 2 * h)) / (12 * h * h);
}

double d1_central(const ScalarFn& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2 * h);
}

double d2_central(const ScalarFn& f, double x, double h) {
  return (f(x + h) - 2 * f(x) + f(x - h)) / (h * h);
}

double fit_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("fit_slope: need at least two paired points");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace lb::numerics
