#pragma once

#include <string>
#include <vector>

#include "cxsim/cognition.hpp"
#include "cxsim/complexity.hpp"
#include "cxsim/roots.hpp"
#include "cxsim/scenario.hpp"

namespace cxsim {

// "Complexity at query_month equals the baseline at equivalent_month."
struct EquivalencePair {
  double query_month = 1000.0;
  double equivalent_month = 0.0;
};

struct CalibrationTargets {
  double peak_month = 300.0;
  EquivalencePair baseline_equiv{1000.0, 138.0};
  EquivalencePair exp_weaken_equiv{1000.0, 97.0};
  double intersection_month = 600.0;

  void validate(double horizon = kDefaultHorizon) const;  // throws ParameterError
};

// Ratio D_raw(0) / C(0) fixed by calibrate_cognition.
inline constexpr double kNewbornDepthRatio = 0.05;

// The strictly increasing part [0, peak] of a curve, with its inverse.
class AscendingBranch {
 public:
  AscendingBranch(Scenario baseline, const RootFindConfig& cfg, double horizon = kDefaultHorizon);

  double peak_month() const { return peak_month_; }
  double floor_value() const { return floor_value_; }
  double peak_value() const { return peak_value_; }

  // Month on [0, peak] where the baseline equals `value`. Throws RangeError
  // outside [floor_value, peak_value].
  double invert(double value) const;

 private:
  Scenario baseline_;
  RootFindConfig cfg_;
  double peak_month_;
  double floor_value_;
  double peak_value_;
};

// Month of the interior maximum of log2_complexity: coarse scan with
// `scan_step`, then golden-section refinement. Throws ShapeError when the
// maximum sits on a boundary of [0, horizon].
double find_peak(const Scenario& scenario, const RootFindConfig& cfg = {},
                 double horizon = kDefaultHorizon, double scan_step = 1.0);

double equivalent_age(const Scenario& scenario, double query_month, const Scenario& baseline,
                      const RootFindConfig& cfg = {}, double horizon = kDefaultHorizon);

struct GrowthFit {
  GrowthParams growth;
  double peak_residual = 0.0;   // months
  double equiv_residual = 0.0;  // months
  int iterations = 0;
  std::string method;
};

// Fits (b, tau_g) of the Gompertz law so the linear-mode baseline peaks at
// targets.peak_month and matches targets.baseline_equiv. n_max is a free
// scale.
GrowthFit calibrate_growth(const CalibrationTargets& targets, double h, const RootFindConfig& cfg = {},
                           double n_max = 1e6, double horizon = kDefaultHorizon);

struct TauFit {
  double tau = 0.0;
  double residual = 0.0;  // months
  int iterations = 0;
};

// tau of the double-exponential mode such that its curve, inverted on the
// linear-mode baseline, hits `target`.
TauFit calibrate_weakening_tau(const GrowthParams& growth, double h, const EquivalencePair& target,
                               const RootFindConfig& cfg = {}, double horizon = kDefaultHorizon);

// E = 1, K0 = 1, l = default_coupling; solves k and lambda so that raw depth
// meets the complexity curve at intersection_month and starts at
// kNewbornDepthRatio of it.
CognitionParams calibrate_cognition(const GrowthParams& growth, const WeakeningMode& mode,
                                    double intersection_month, const RootFindConfig& cfg = {},
                                    double horizon = kDefaultHorizon);

// Months on the 1-month grid where raw depth minus complexity changes sign.
std::vector<double> depth_crossings(const CognitionParams& params, const Scenario& scenario,
                                    double horizon = kDefaultHorizon);

// The single month where raw depth crosses the complexity curve.
double find_intersection(const CognitionParams& params, const Scenario& scenario,
                         const RootFindConfig& cfg = {}, double horizon = kDefaultHorizon);

// Everything the calibrate command produces.
struct Calibration {
  CalibrationTargets targets;
  double h = kReferenceDecayRate;
  GrowthFit growth_fit;
  TauFit tau_fit;
  CognitionParams cognition;
  double intersection_residual = 0.0;

  Scenario baseline() const;
  Scenario weakened() const;  // double-exponential mode with the fitted tau
};

Calibration calibrate_all(const CalibrationTargets& targets, double h = kReferenceDecayRate,
                          const RootFindConfig& cfg = {}, double n_max = 1e6,
                          double horizon = kDefaultHorizon);

}  // namespace cxsim
