#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace lb::numerics {

using ScalarFn = std::function<double(double)>;

/// Adaptive Simpson with Richardson correction. Signed: integrate(f, b, a) == -integrate(f, a, b).
double adaptive_simpson(const ScalarFn& f, double a, double b, double abs_tol = 1e-10,
                        int max_depth = 60);

/// Composite midpoint rule with n panels.
double midpoint_rule(const ScalarFn& f, double a, double b, std::size_t n);

/// Bisection on a bracket with f(lo) and f(hi) of opposite sign (or one of them zero).
double bisect(const ScalarFn& f, double lo, double hi, double x_tol = 1e-14, int max_iter = 200);

/// Every sign change of f on `samples` equal panels over [lo, hi], refined by bisection.
std::vector<double> scan_roots(const ScalarFn& f, double lo, double hi, std::size_t samples);

/// n equally spaced points including both ends; n == 1 yields {lo}.
std::vector<double> linspace(double lo, double hi, std::size_t n);

// Five-point central stencils, O(h^4).
double d1_five_point(const ScalarFn& f, double x, double h);
double d2_five_point(const ScalarFn& f, double x, double h);

// Three-point central stencils, O(h^2).
double d1_central(const ScalarFn& f, double x, double h);
double d2_central(const ScalarFn& f, double x, double h);

/// Least-squares slope of y against x.
double fit_slope(std::span<const double> x, std::span<const double> y);

}  // namespace lb::numerics
