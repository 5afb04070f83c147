#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "lbverify/model.hpp"

namespace lb::congruence {

enum class Direction { Outgoing = 1, Ingoing = -1 };

/// Radial geodesic congruence with conserved energy per unit mass E~ = -u_t.
struct CongruenceConfig {
  double e_tilde = 2.0;
  Direction direction = Direction::Outgoing;
};

/// Throws ParameterError unless |E~| >= 1.
CongruenceConfig make_config(double e_tilde, Direction direction = Direction::Outgoing);

inline int sign_of(Direction d) { return static_cast<int>(d); }

/// Points with |E~^2 - w| < kTurningBand * E~^2 are treated as turning points.
inline constexpr double kTurningBand = 1e-10;

struct FourVelocity {
  std::array<double, 4> u{};  ///< contravariant (t, r, phi, z)
  bool turning_point = false;
};

/// A value that may be undefined because a turning point makes it diverge.
struct Flagged {
  double value = 0.0;  ///< NaN when divergent
  bool divergent = false;
};

enum class Channel { Timelike, Null };

struct KinematicsSample {
  double r = 0.0;
  double theta = 0.0;
  double dtheta_dtau = 0.0;
  Channel channel = Channel::Timelike;
  bool divergent = false;
};

/// x = w / E~^2, b = |xi / E~|, y = sqrt(x^6 - 4 b^2 x^3), a = sqrt(3 / lambda).
struct FocusingVars {
  double x = 0.0, b = 0.0, y = 0.0, a = 0.0;
};

struct PrintedRate {
  double printed = 0.0;  ///< (lambda/2) Phi_b / (x (1 - x))
  double direct = 0.0;  ///< from the expansion formula
  double difference = 0.0;
  bool divergent = false;
};

/// 54 x^2 - 91 x + 40 = 6 Phi_0(x).
struct QuadraticReduction {
  std::array<double, 3> coefficients{54.0, -91.0, 40.0};
  double discriminant = 0.0;
  std::vector<double> real_roots;
};

struct PhiBRoots {
  double b = 0.0;
  double x_lo = 0.0, x_hi = 1.0;
  std::vector<double> interior;
  std::vector<double> boundary;
  std::optional<QuadraticReduction> reduction;  ///< only for b = 0
};

struct PhiBSignMap {
  double b = 0.0;
  std::size_t points = 0;
  std::size_t positive = 0, negative = 0, zero = 0;
  std::vector<double> positive_x;
  double max_value = 0.0;
  double min_value = 0.0;
};

struct RadiusCandidates {
  double exp_channel = 0.0;         ///< e^{6r/a} = X
  std::vector<double> w_channel;    ///< w(r) = X, empty when X < min w
};

struct NullRate {
  double rate = 0.0;
  double bracket = 0.0;  ///< w'' - (3/2) w'^2 / w
};

/// u = (E~/w, +/- sqrt(E~^2/w - 1), 0, 0). Throws DomainError where w > E~^2.
FourVelocity four_velocity(const SolutionParams& p, const CongruenceConfig& cfg, double r);

/// g_mu nu u^mu u^nu for the LB metric at r.
double norm(const SolutionParams& p, const FourVelocity& u, double r);

/// Radial part of the potential Phi = E~ t + Phi_r(r) with u_a = -d_a Phi:
/// Phi_r(r1) - Phi_r(r0) = -s Int_{r0}^{r1} sqrt(E~^2/w - 1) dr, s = +1 outgoing.
/// Turning-point endpoints are handled by a square-root substitution.
double hypersurface_potential(const SolutionParams& p, const CongruenceConfig& cfg, double r0,
                              double r1);

/// theta = s w^{-3/2} d/dr (w sqrt(E~^2 - w)).
Flagged expansion_timelike(const SolutionParams& p, const CongruenceConfig& cfg, double r);

/// d theta / d tau = sqrt(E~^2/w - 1) d/dr [w^{-3/2} d/dr (w sqrt(E~^2 - w))], analytic in w, w', w''.
Flagged dtheta_dtau_direct(const SolutionParams& p, const CongruenceConfig& cfg, double r);

KinematicsSample timelike_sample(const SolutionParams& p, const CongruenceConfig& cfg, double r);

FocusingVars focusing_vars(const SolutionParams& p, const CongruenceConfig& cfg, double r);

/// The printed rational expression in (x, y(x, b)). Throws DomainError if y^2 < 0 or at the
/// pole x^3 + y = 0.
double phi_b_eval(double x, double b);

/// (6 Phi_0(x)) for b = 0, i.e. 54 x^2 - 91 x + 40.
QuadraticReduction phi_0_reduction();

PrintedRate dtheta_dtau_printed(const SolutionParams& p, const CongruenceConfig& cfg, double r);

/// Sign changes of Phi_b over (cbrt(4 b^2), 1) refined by bisection; 0 <= b <= 1/2.
PhiBRoots phi_b_roots(double b, std::size_t brackets = 4096);

/// Sign of Phi_b at `points` cell midpoints of (cbrt(4 b^2), 1).
PhiBSignMap phi_b_sign_map(double b, std::size_t points = 512);

/// Two readings of "w(r) = X": r = (a/6) ln X, and roots of w(r) = X by bisection.
RadiusCandidates radius_from_root(const SolutionParams& p, double x_value);

/// r* = a e^{r/a} F(1/6, 1/3; 7/6; -xi^2 e^{6r/a}).
double tortoise(const SolutionParams& p, double r);

/// Independent route: a Int_0^1 (1 + xi^2 t^6)^{-1/3} dt + Int_0^r w^{-1/2} dr by quadrature.
double tortoise_quadrature(const SolutionParams& p, double r);

/// (1/w) sqrt(E~^2 - w) [w'' - (3/2) w'^2 / w] from raw w, w', w''.
NullRate null_rate_from(double w, double w_p, double w_pp, double e_tilde);
NullRate null_rate(const SolutionParams& p, const CongruenceConfig& cfg, double r);

}  // namespace lb::congruence
