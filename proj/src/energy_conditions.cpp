#include "lbverify/energy_conditions.hpp"

#include <algorithm>
#include <cmath>

#include "lbverify/curvature.hpp"
#include "lbverify/errors.hpp"
#include "lbverify/numerics.hpp"

namespace lb::energy {

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::NEC:
      return "nec";
    case Condition::WEC:
      return "wec";
    case Condition::SEC:
      return "sec";
    case Condition::DEC:
      return "dec";
  }
  return "nec";
}

FrameStress stress_from_sample(const MetricSample& s) {
  const auto ric = curvature::ricci_diagonal(s);
  // Orthonormal components: divide by |g_mu mu|.
  const double e_t = std::exp(s.u[0]);
  const double e_p = std::exp(s.u[1]);
  const double e_z = std::exp(s.u[2]);
  const double r_tt = ric.tt / e_t;  // R_{t^t^}
  const double r_rr = ric.rr;
  const double r_pp = ric.pp / e_p;
  const double r_zz = ric.zz / e_z;
  const double scalar = -r_tt + r_rr + r_pp + r_zz;
  // G_{a^b^} = R_{a^b^} - R/2 eta_{ab}, eta = diag(-1, 1, 1, 1).
  return {r_tt + 0.5 * scalar, r_rr - 0.5 * scalar, r_pp - 0.5 * scalar, r_zz - 0.5 * scalar};
}

FrameStress stress_decompose(const SolutionParams& p, double r) {
  return stress_from_sample(metric_eval(p, r));
}

ConditionMargins condition_margins(const FrameStress& t) {
  ConditionMargins m;
  m.nec_r = t.rho + t.p_r;
  m.nec_phi = t.rho + t.p_phi;
  m.nec_z = t.rho + t.p_z;
  m.wec_extra = t.rho;
  m.sec = t.rho + t.p_r + t.p_phi + t.p_z;
  m.dec_r = t.rho - std::abs(t.p_r);
  m.dec_phi = t.rho - std::abs(t.p_phi);
  m.dec_z = t.rho - std::abs(t.p_z);
  return m;
}

double min_margin(const ConditionMargins& m, Condition c) {
  const double nec = std::min({m.nec_r, m.nec_phi, m.nec_z});
  switch (c) {
    case Condition::NEC:
      return nec;
    case Condition::WEC:
      return std::min(nec, m.wec_extra);
    case Condition::SEC:
      return std::min(nec, m.sec);
    case Condition::DEC:
      return std::min({m.dec_r, m.dec_phi, m.dec_z});
  }
  return nec;
}

bool holds(const ConditionMargins& m, Condition c) { return min_margin(m, c) >= -kHoldTolerance; }

RegionScan region_scan(const SolutionParams& p, double r0, double r1, std::size_t samples) {
  if (r0 == r1) samples = 1;
  if (samples < 1 || (samples < 2 && r0 != r1)) {
    throw ParameterError("region_scan needs at least 2 samples");
  }
  RegionScan scan;
  scan.r0 = r0;
  scan.r1 = r1;
  scan.samples = samples;
  const auto grid = numerics::linspace(r0, r1, samples);
  std::vector<ConditionMargins> margins;
  margins.reserve(grid.size());
  for (double r : grid) margins.push_back(condition_margins(stress_decompose(p, r)));

  for (std::size_t ci = 0; ci < kAllConditions.size(); ++ci) {
    const Condition cond = kAllConditions[ci];
    ConditionScan& cs = scan.conditions[ci];
    cs.condition = cond;
    // Shifted so that the root of g is the hold/violate boundary.
    auto g = [&](double r) {
      return min_margin(condition_margins(stress_decompose(p, r)), cond) + kHoldTolerance;
    };
    cs.min_margin = cs.max_margin = min_margin(margins.front(), cond);
    bool open = false;
    double start = grid.front();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double mm = min_margin(margins[i], cond);
      cs.min_margin = std::min(cs.min_margin, mm);
      cs.max_margin = std::max(cs.max_margin, mm);
      const bool h = mm >= -kHoldTolerance;
      if (h && !open) {
        start = i == 0 ? grid[0] : numerics::bisect(g, grid[i - 1], grid[i]);
        open = true;
      } else if (!h && open) {
        cs.holds_on.push_back({start, numerics::bisect(g, grid[i - 1], grid[i])});
        open = false;
      }
    }
    if (open) cs.holds_on.push_back({start, grid.back()});
  }
  return scan;
}

}  // namespace lb::energy
