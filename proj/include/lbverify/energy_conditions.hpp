#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "lbverify/model.hpp"

namespace lb::energy {

/// Orthonormal-frame effective source, units with 8 pi G = 1. The cosmological term is part
/// of the source.
struct FrameStress {
  double rho = 0.0;
  double p_r = 0.0, p_phi = 0.0, p_z = 0.0;
};

struct ConditionMargins {
  double nec_r = 0.0, nec_phi = 0.0, nec_z = 0.0;  ///< rho + p_i
  double wec_extra = 0.0;                          ///< rho
  double sec = 0.0;                                ///< rho + Sum p_i
  double dec_r = 0.0, dec_phi = 0.0, dec_z = 0.0;  ///< rho - |p_i|
};

enum class Condition { NEC, WEC, SEC, DEC };
inline constexpr std::array<Condition, 4> kAllConditions{Condition::NEC, Condition::WEC,
                                                         Condition::SEC, Condition::DEC};

/// A condition holds when every one of its margins is >= -kHoldTolerance.
inline constexpr double kHoldTolerance = 1e-12;

std::string_view to_string(Condition c);

/// rho = G_{t^t^}, p_i = G_{i^i^} built from the closed-form Ricci tensor.
FrameStress stress_from_sample(const MetricSample& s);
FrameStress stress_decompose(const SolutionParams& p, double r);

ConditionMargins condition_margins(const FrameStress& t);

/// Smallest margin among those defining the condition.
double min_margin(const ConditionMargins& m, Condition c);
bool holds(const ConditionMargins& m, Condition c);

struct Interval {
  double lo, hi;
};

struct ConditionScan {
  Condition condition;
  std::vector<Interval> holds_on;  ///< maximal sub-intervals of the window where it holds
  double min_margin = 0.0;         ///< over all samples
  double max_margin = 0.0;
};

struct RegionScan {
  double r0 = 0.0, r1 = 0.0;
  std::size_t samples = 0;
  std::array<ConditionScan, 4> conditions{};
};

/// Samples the window and locates sign changes of each condition's minimum margin; boundaries
/// are refined by bisection. samples >= 2 unless r0 == r1 (single-point report).
RegionScan region_scan(const SolutionParams& p, double r0, double r1, std::size_t samples);

}  // namespace lb::energy
