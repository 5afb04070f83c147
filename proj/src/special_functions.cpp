#include "lbverify/special_functions.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "lbverify/errors.hpp"

namespace lb::special {

namespace {

constexpr int kMaxTerms = 100000;
constexpr double kRelStop = 1e-16;
constexpr double kPfaffSwitch = -0.5;
constexpr double kReciprocalSwitch = -9.0;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::nearbyint(x); }

// 1/Gamma(x), zero at the poles.
double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return 1.0 / std::tgamma(x);
}

std::string describe(const HypergeometricQuery& q) {
  std::ostringstream os;
  os.precision(17);
  os << "F(" << q.a << ", " << q.b << "; " << q.c << "; " << q.z << ")";
  return os.str();
}

// Term-ratio summation of the defining series, |z| < 1.
double series(double a, double b, double c, double z) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < kMaxTerms; ++k) {
    const double kk = static_cast<double>(k);
    term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * z;
    sum += term;
    if (term == 0.0) return sum;
    // Only stop once the ratio has settled below one, otherwise a small early term
    // can precede growing ones.
    const double ratio = std::abs((a + kk + 1.0) * (b + kk + 1.0) / ((c + kk + 1.0) * (kk + 2.0)) * z);
    if (std::abs(term) <= kRelStop * std::abs(sum) && ratio < 1.0) return sum;
  }
  throw SpecialFunctionError("2F1 series did not converge within 1e5 terms");
}

double pfaff_a(const HypergeometricQuery& q) {
  const double zeta = q.z / (q.z - 1.0);
  return std::pow(1.0 - q.z, -q.a) * series(q.a, q.c - q.b, q.c, zeta);
}

double pfaff_b(const HypergeometricQuery& q) {
  const double zeta = q.z / (q.z - 1.0);
  return std::pow(1.0 - q.z, -q.b) * series(q.c - q.a, q.b, q.c, zeta);
}

// Connection formula to 1/z for z < -1 (a - b not an integer).
double reciprocal(const HypergeometricQuery& q) {
  const auto [a, b, c, z] = q;
  const double inv = 1.0 / z;
  const double t1 = std::tgamma(c) * std::tgamma(b - a) * rgamma(b) * rgamma(c - a) *
                    std::pow(-z, -a);
  const double t2 = std::tgamma(c) * std::tgamma(a - b) * rgamma(a) * rgamma(c - b) *
                    std::pow(-z, -b);
  const double s1 = t1 == 0.0 ? 0.0 : series(a, a - c + 1.0, a - b + 1.0, inv);
  const double s2 = t2 == 0.0 ? 0.0 : series(b, b - c + 1.0, b - a + 1.0, inv);
  return t1 * s1 + t2 * s2;
}

bool reciprocal_usable(const HypergeometricQuery& q) {
  const double d = q.a - q.b;
  return std::abs(d - std::nearbyint(d)) > 1e-2;
}

void check_query(const HypergeometricQuery& q) {
  if (is_nonpositive_integer(q.c)) {
    throw ParameterError("2F1: c is a non-positive integer in " + describe(q));
  }
  if (!(q.z <= 0.0)) {
    throw RangeError("2F1: only z <= 0 is supported, got " + describe(q), 0.0);
  }
}

}  // namespace

double pochhammer(double a, unsigned k) {
  double p = 1.0;
  for (unsigned i = 0; i < k; ++i) p *= a + static_cast<double>(i);
  return p;
}

double gauss_2f1(const HypergeometricQuery& q) { return gauss_2f1_via(q, Hyp2F1Path::Auto); }

double gauss_2f1_via(const HypergeometricQuery& q, Hyp2F1Path path) {
  check_query(q);
  if (path == Hyp2F1Path::Auto) {
    if (q.z >= kPfaffSwitch) {
      path = Hyp2F1Path::Series;
    } else if (q.z >= kReciprocalSwitch || !reciprocal_usable(q)) {
      path = Hyp2F1Path::PfaffA;
    } else {
      path = Hyp2F1Path::Reciprocal;
    }
  }
  try {
    switch (path) {
      case Hyp2F1Path::Series:
        if (!(std::abs(q.z) < 1.0)) {
          throw RangeError("2F1: direct series needs |z| < 1, got " + describe(q), 1.0);
        }
        return series(q.a, q.b, q.c, q.z);
      case Hyp2F1Path::PfaffA:
        return pfaff_a(q);
      case Hyp2F1Path::PfaffB:
        return pfaff_b(q);
      case Hyp2F1Path::Reciprocal:
        if (!(q.z < -1.0) || !reciprocal_usable(q)) {
          throw RangeError("2F1: 1/z route needs z < -1 and non-integer a-b, got " + describe(q),
                           -1.0);
        }
        return reciprocal(q);
      case Hyp2F1Path::Auto:
        break;
    }
  } catch (const SpecialFunctionError& e) {
    throw SpecialFunctionError(std::string(e.what()) + " for " + describe(q));
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace lb::special
