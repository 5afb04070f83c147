#pragma once

namespace lb::special {

/// Parameters of a Gauss hypergeometric evaluation F(a, b; c; z).
/// Supported: real parameters, c not a non-positive integer, z <= 0.
struct HypergeometricQuery {
  double a;
  double b;
  double c;
  double z;
};

/// Evaluation routes. `Auto` picks series for |z| <= 0.5, Pfaff for -9 <= z < -0.5
/// and the 1/z connection formula below that.
enum class Hyp2F1Path { Auto, Series, PfaffA, PfaffB, Reciprocal };

/// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1. Overflow yields +/-inf.
double pochhammer(double a, unsigned k);

/// Gauss 2F1 on z <= 0. Throws ParameterError for a pole in c, RangeError for z > 0,
/// SpecialFunctionError if the series does not converge within 1e5 terms.
double gauss_2f1(const HypergeometricQuery& q);

/// Same evaluation forced through one route. Series requires |z| < 1;
/// Reciprocal requires z < -1 and a - b not an integer.
double gauss_2f1_via(const HypergeometricQuery& q, Hyp2F1Path path);

}  // namespace lb::special
