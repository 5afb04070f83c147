#include <doctest.h>

#include <cmath>

#include "lbverify/errors.hpp"
#include "lbverify/scalar_field.hpp"

using namespace lb;

TEST_CASE("phi'^2 from the constraint, frozen value") {
  const auto p = make_params(3.0, 1.0);
  const auto sq = phi_prime_sq_constraint(metric_eval(p, 0.3), 3.0);
  CHECK_FALSE(sq.negative);
  CHECK(std::abs(sq.value - 2.9215041668900493753) < 1e-12);
}

TEST_CASE("vacuum member has no scalar field") {
  const auto p = make_params(3.0, 0.0);
  for (double r : {-1.5, 0.0, 1.5}) {
    CHECK(phi_prime_sq_constraint(metric_eval(p, r), 3.0).value == 0.0);
    CHECK(noether_charge(p, r) == 0.0);
  }
}

TEST_CASE("phi accumulated against the arctangent closed form") {
  const auto p = make_params(3.0, 1.0);
  CHECK(std::abs(phi_accumulate(p, 0.0, 0.5) - 0.924052324436034) < 1e-9);
  CHECK(std::abs(phi_accumulate(p, 0.5, 0.0) + 0.924052324436034) < 1e-9);
  const auto q = make_params(3.0, 1.0, -1);
  CHECK(std::abs(phi_accumulate(q, 0.0, 0.5) + 0.924052324436034) < 1e-9);
}

TEST_CASE("Noether charge") {
  for (double xi : {0.1, 0.5, 1.0, 2.0}) {
    const auto p = make_params(3.0, xi);
    const double j = xi * std::sqrt(2.0 / 3.0);
    for (double r : {-2.0, -0.5, 0.0, 0.7, 2.0}) CHECK(std::abs(noether_charge(p, r) - j) / j < 1e-8);
  }
}

TEST_CASE("printed integrand goes negative in the tails") {
  const auto p = make_params(3.0, 1.0);
  CHECK(phi_prime_sq_printed(metric_eval(p, 2.0), 3.0) < 0.0);
  CHECK(phi_prime_sq_constraint(metric_eval(p, 2.0), 3.0).value >= 0.0);
}

TEST_CASE("scalar profile") {
  const auto p = make_params(3.0, 0.5);
  const std::vector<double> grid{-1.0, 0.0, 1.0};
  const auto prof = scalar_profile(p, grid);
  REQUIRE(prof.phi.size() == 3);
  CHECK(prof.phi[0] == 0.0);
  CHECK(prof.phi[2] > prof.phi[1]);
  CHECK(prof.noether.size() == 3);
}
