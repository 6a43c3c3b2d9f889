#pragma once

#include <cmath>

#include "cxsim/calibration.hpp"
#include "cxsim/scenario.hpp"

namespace cxsim::test {

// b is small enough that exp(-b e^{-t/tau}) rounds to exactly 1: N(t) == n.
inline GrowthParams flat_growth(double n) { return GrowthParams{n, 1e-300, 60.0}; }

inline Scenario flat_scenario(double n, double h) {
  return Scenario{flat_growth(n), LinearExponent{h}, {}, "flat"};
}

// Growth parameters fitted independently (scipy fsolve on the same two
// anchors, peak 300 and 1000 -> 138) and frozen here.
inline constexpr double kOracleB = 0.07955306;
inline constexpr double kOracleTauG = 61.175714;

inline const Calibration& reference_calibration() {
  static const Calibration c = calibrate_all(CalibrationTargets{});
  return c;
}

inline bool rel_close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace cxsim::test
