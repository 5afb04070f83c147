#include <doctest.h>

#include <cmath>

#include "lbverify/energy_conditions.hpp"
#include "lbverify/scalar_field.hpp"

using namespace lb;
using namespace lb::energy;

TEST_CASE("stress at a point, frozen values") {
  const auto t = stress_decompose(make_params(3.0, 1.0), 0.3);
  CHECK(std::abs(t.rho - 4.4607520834450246876) < 1e-11);
  CHECK(std::abs(t.p_r + 1.5392479165549753124) < 1e-11);
  CHECK(std::abs(t.rho + t.p_phi) < 1e-11);
  CHECK(std::abs(t.rho + t.p_z) < 1e-11);
}

TEST_CASE("margin identities over the grid") {
  for (double lambda : {0.75, 3.0, 12.0})
    for (double xi : {0.0, 0.5, 2.0}) {
      const auto p = make_params(lambda, xi);
      for (double r : default_grid(p, 513)) {
        const auto s = metric_eval(p, r);
        const auto m = condition_margins(stress_from_sample(s));
        CHECK(std::abs(m.nec_phi) < 1e-9);
        CHECK(std::abs(m.nec_z) < 1e-9);
        CHECK(std::abs(m.sec + 2.0 * lambda) < 1e-8);
        CHECK(std::abs(m.nec_r - phi_prime_sq_constraint(s, lambda).value) < 1e-9);
      }
    }
}

TEST_CASE("hold predicates") {
  const auto m = condition_margins(stress_decompose(make_params(3.0, 1.0), 0.0));
  CHECK(holds(m, Condition::NEC));
  CHECK(holds(m, Condition::WEC));
  CHECK_FALSE(holds(m, Condition::SEC));
  CHECK(min_margin(m, Condition::SEC) == doctest::Approx(-6.0));
}

TEST_CASE("region scan") {
  const auto scan = region_scan(make_params(3.0, 1.0), -2.0, 2.0, 1025);
  for (const auto& c : scan.conditions) {
    if (c.condition == Condition::SEC) {
      CHECK(c.holds_on.empty());
    } else if (c.condition == Condition::NEC) {
      REQUIRE(c.holds_on.size() == 1);
      CHECK(c.holds_on[0].lo == -2.0);
      CHECK(c.holds_on[0].hi == 2.0);
    }
  }
  const auto single = region_scan(make_params(3.0, 1.0), 0.5, 0.5, 1);
  CHECK(single.samples == 1);
}

TEST_CASE("condition names") {
  CHECK(to_string(Condition::NEC) == "nec");
  CHECK(to_string(Condition::DEC) == "dec");
}
