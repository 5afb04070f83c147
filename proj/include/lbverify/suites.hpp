#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lbverify/congruence.hpp"
#include "lbverify/model.hpp"
#include "lbverify/report.hpp"

namespace lb::suites {

/// Radial scan window.
struct Window {
  double r_min = 0.0;
  double r_max = 0.0;
  std::size_t samples = 4096;
};

/// [-2a, 2a] with the given sample count.
Window default_window(const SolutionParams& p, std::size_t samples = 4096);

/// Closed-form residuals, curvature oracle, scalar-field checks, ODE oracle, constants and the
/// alpha-deformation experiment.
VerificationReport verify_suite(const SolutionParams& p, const Window& win);

/// Fixed point, Jacobian spectrum and linearised profile.
VerificationReport stability_suite(double lambda);

/// Trace identities of the effective stress and per-condition hold intervals.
VerificationReport energy_suite(const SolutionParams& p, const Window& win);

/// Timelike and null congruences, the Phi_b polynomial and the printed numeric anchors.
/// `b` selects the Phi_b root scan (0 <= b <= 1/2); defaults to 0.
VerificationReport congruence_suite(const SolutionParams& p,
                                    const congruence::CongruenceConfig& cfg, const Window& win,
                                    std::optional<double> b = std::nullopt);

/// Hypergeometric closed form against quadrature, and the derivative identity.
VerificationReport tortoise_suite(const SolutionParams& p, const Window& win);

/// `count` equally spaced values from start to stop (count == 1 gives start).
struct SweepAxis {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 1;
  std::vector<double> values() const;
};

/// Compact per-point summary over the (lambda, xi, E~) grid. Points are evaluated on up to
/// `threads` workers; rows are ordered by grid index (lambda outermost).
VerificationReport sweep_suite(const SweepAxis& lambda, const SweepAxis& xi,
                               const SweepAxis& e_tilde, std::size_t samples, unsigned threads);

}  // namespace lb::suites
