#include "cxsim/calibration.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "cxsim/errors.hpp"

namespace cxsim {
namespace {

RootFindConfig tightened(const RootFindConfig& cfg) {
  RootFindConfig inner = cfg;
  inner.abs_tol = cfg.abs_tol * 1e-2;
  return inner;
}

Scenario linear_baseline(const GrowthParams& growth, double h) {
  return Scenario{growth, LinearExponent{h}, {}, "baseline"};
}

// Signed distance of an equivalent-age query from `target`. Out-of-range
// values map to a residual of the right sign so bracketing still works.
double equivalence_residual(const AscendingBranch& branch, double value, double target) {
  try {
    return branch.invert(value) - target;
  } catch (const RangeError& e) {
    return e.side() == RangeError::Side::Below ? -target - 1.0 : branch.peak_month() - target + 1.0;
  }
}

}  // namespace

void CalibrationTargets::validate(double horizon) const {
  auto in_horizon = [&](double m) { return std::isfinite(m) && m >= 0.0 && m <= horizon; };
  if (!in_horizon(peak_month) || peak_month == 0.0) throw ParameterError("targets.peak_month outside (0, horizon]");
  if (!in_horizon(intersection_month)) throw ParameterError("targets.intersection_month outside horizon");
  for (const auto* pair : {&baseline_equiv, &exp_weaken_equiv}) {
    if (!in_horizon(pair->query_month) || !in_horizon(pair->equivalent_month))
      throw ParameterError("targets: equivalence months outside horizon");
    if (!(pair->equivalent_month < peak_month))
      throw ParameterError("targets: equivalent months must lie before the peak month");
  }
}

AscendingBranch::AscendingBranch(Scenario baseline, const RootFindConfig& cfg, double horizon)
    : baseline_(std::move(baseline)), cfg_(cfg) {
  peak_month_ = find_peak(baseline_, cfg_, horizon);
  floor_value_ = log2_complexity(0.0, baseline_);
  peak_value_ = log2_complexity(peak_month_, baseline_);
}

double AscendingBranch::invert(double value) const {
  if (std::isnan(value)) throw RangeError(RangeError::Side::Below, "equivalent age: value is NaN");
  if (value > peak_value_) {
    std::ostringstream os;
    os << "equivalent age: value " << value << " above baseline peak " << peak_value_;
    throw RangeError(RangeError::Side::Above, os.str());
  }
  if (value < floor_value_) {
    std::ostringstream os;
    os << "equivalent age: value " << value << " below baseline at month 0 (" << floor_value_ << ")";
    throw RangeError(RangeError::Side::Below, os.str());
  }
  auto diff = [&](double t) { return log2_complexity(t, baseline_) - value; };
  return bisect(diff, 0.0, peak_month_, cfg_).x;
}

double find_peak(const Scenario& scenario, const RootFindConfig& cfg, double horizon, double scan_step) {
  cfg.validate();
  const auto grid = sample_grid(0.0, horizon, scan_step);
  std::size_t best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = log2_complexity(grid[i], scenario);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  if (best == 0) throw ShapeError("find_peak: curve is non-increasing; maximum at month 0");
  if (best + 1 == grid.size()) throw ShapeError("find_peak: curve is non-decreasing; maximum at the horizon");
  auto f = [&](double t) { return log2_complexity(t, scenario); };
  return golden_section_max(f, grid[best - 1], grid[best + 1], cfg).x;
}

double equivalent_age(const Scenario& scenario, double query_month, const Scenario& baseline,
                      const RootFindConfig& cfg, double horizon) {
  const AscendingBranch branch(baseline, cfg, horizon);
  return branch.invert(log2_complexity(query_month, scenario));
}

GrowthFit calibrate_growth(const CalibrationTargets& targets, double h, const RootFindConfig& cfg,
                           double n_max, double horizon) {
  cfg.validate();
  targets.validate(horizon);
  if (!(h > 0.0)) throw CalibrationError("calibrate_growth: h must be > 0 for an interior peak");
  if (!(n_max > 0.0)) throw ParameterError("calibrate_growth: n_max must be > 0");

  const RootFindConfig inner = tightened(cfg);
  const double c = h * std::numbers::log2e;
  const double tp = targets.peak_month;
  if (!(1.0 - c * tp > 0.0)) throw CalibrationError("calibrate_growth: base reaches one state before the peak");
  // Stationarity of N(t)(1 - c t) at tp: N'/N = c / (1 - c tp), and for the
  // Gompertz law N'/N = b exp(-t / tau_g) / tau_g.
  const double rate_at_peak = c / (1.0 - c * tp);
  auto b_for = [&](double tau_g) { return rate_at_peak * tau_g * std::exp(tp / tau_g); };

  const auto& equiv = targets.baseline_equiv;
  auto residuals = [&](double b, double tau_g) -> std::array<double, 2> {
    const Scenario baseline = linear_baseline(GrowthParams{n_max, b, tau_g}, h);
    const AscendingBranch branch(baseline, inner, horizon);
    const double value = log2_complexity(equiv.query_month, baseline);
    return {branch.peak_month() - tp, equivalence_residual(branch, value, equiv.equivalent_month)};
  };
  auto nested = [&](double log_tau) {
    const double tau_g = std::exp(log_tau);
    try {
      return residuals(b_for(tau_g), tau_g)[1];
    } catch (const ShapeError&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  };

  // Stage 1: nested bisection. The peak condition fixes b for each tau_g;
  // bisect the equivalence residual over log tau_g.
  constexpr int kScanPoints = 80;
  const double log_lo = std::log(tp / 30.0);
  const double log_hi = std::log(tp * 30.0);
  double prev_x = log_lo;
  double prev_r = nested(prev_x);
  double bracket_lo = NAN;
  double bracket_hi = NAN;
  for (int i = 1; i <= kScanPoints; ++i) {
    const double x = log_lo + (log_hi - log_lo) * i / kScanPoints;
    const double r = nested(x);
    if (std::isfinite(prev_r) && std::isfinite(r) && std::signbit(prev_r) != std::signbit(r)) {
      bracket_lo = prev_x;
      bracket_hi = x;
      break;
    }
    prev_x = x;
    prev_r = r;
  }
  if (std::isnan(bracket_lo)) throw CalibrationError("calibrate_growth: no tau_g bracket matches the equivalence target");

  RootFindConfig log_cfg = cfg;
  log_cfg.abs_tol = 1e-12;
  const auto seed = bisect(nested, bracket_lo, bracket_hi, log_cfg);
  std::array<double, 2> x{std::log(b_for(std::exp(seed.x))), seed.x};
  auto r = residuals(std::exp(x[0]), std::exp(x[1]));
  int iterations = seed.iterations;
  auto norm = [](const std::array<double, 2>& v) { return std::max(std::abs(v[0]), std::abs(v[1])); };

  GrowthFit fit;
  fit.method = "nested-bisection";

  // Stage 2: damped Newton on both numeric residuals, finite-difference
  // Jacobian in (log b, log tau_g).
  constexpr double kStep = 1e-4;
  const int newton_limit = std::min(cfg.max_iter, 50);
  for (int it = 0; it < newton_limit && norm(r) >= 0.1 * cfg.abs_tol; ++it) {
    ++iterations;
    std::array<std::array<double, 2>, 2> jac{};
    for (int j = 0; j < 2; ++j) {
      auto xp = x;
      xp[j] += kStep;
      const auto rp = residuals(std::exp(xp[0]), std::exp(xp[1]));
      jac[0][j] = (rp[0] - r[0]) / kStep;
      jac[1][j] = (rp[1] - r[1]) / kStep;
    }
    const double det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
    if (!std::isfinite(det) || det == 0.0) break;
    const std::array<double, 2> dx{(jac[1][1] * r[0] - jac[0][1] * r[1]) / det,
                                   (jac[0][0] * r[1] - jac[1][0] * r[0]) / det};
    bool improved = false;
    for (double damping = 1.0; damping > 1e-3; damping *= 0.5) {
      const std::array<double, 2> trial{x[0] - damping * dx[0], x[1] - damping * dx[1]};
      try {
        const auto rt = residuals(std::exp(trial[0]), std::exp(trial[1]));
        if (norm(rt) < norm(r)) {
          x = trial;
          r = rt;
          improved = true;
          fit.method = "nested-bisection+newton";
          break;
        }
      } catch (const ShapeError&) {
      }
    }
    if (!improved) break;
  }

  if (!(norm(r) < cfg.abs_tol)) {
    std::ostringstream os;
    os << "calibrate_growth: did not converge; residuals peak=" << r[0] << " equiv=" << r[1] << " months";
    throw CalibrationError(os.str());
  }
  fit.growth = GrowthParams{n_max, std::exp(x[0]), std::exp(x[1])};
  fit.peak_residual = r[0];
  fit.equiv_residual = r[1];
  fit.iterations = iterations;
  return fit;
}

TauFit calibrate_weakening_tau(const GrowthParams& growth, double h, const EquivalencePair& target,
                               const RootFindConfig& cfg, double horizon) {
  cfg.validate();
  growth.validate();
  const RootFindConfig inner = tightened(cfg);
  const AscendingBranch branch(linear_baseline(growth, h), inner, horizon);
  auto residual = [&](double tau) {
    const Scenario weakened{growth, DoubleExponential{h, tau}, {}, "weakened"};
    return equivalence_residual(branch, log2_complexity(target.query_month, weakened), target.equivalent_month);
  };

  double lo = 0.05 * target.query_month;
  double hi = 0.5 * target.query_month;
  int expansions = 0;
  while (residual(lo) > 0.0 && expansions < cfg.max_iter) {
    lo /= cfg.bracket_expansion;
    ++expansions;
  }
  while (residual(hi) < 0.0 && expansions < cfg.max_iter) {
    hi *= cfg.bracket_expansion;
    ++expansions;
  }
  const double r_lo = residual(lo);
  const double r_hi = residual(hi);
  if (r_lo > 0.0 || r_hi < 0.0) {
    const double attained_lo = std::clamp(r_lo + target.equivalent_month, 0.0, branch.peak_month());
    const double attained_hi = std::clamp(r_hi + target.equivalent_month, 0.0, branch.peak_month());
    std::ostringstream os;
    os << "calibrate_weakening_tau: target " << target.equivalent_month << " unattainable; tau in [" << lo << ", "
       << hi << "] reaches equivalent months [" << attained_lo << ", " << attained_hi << "]";
    throw BracketError(os.str(), attained_lo, attained_hi);
  }
  const auto root = bisect(residual, lo, hi, cfg);
  return TauFit{root.x, residual(root.x), root.iterations + expansions};
}

CognitionParams calibrate_cognition(const GrowthParams& growth, const WeakeningMode& mode,
                                    double intersection_month, const RootFindConfig& cfg, double horizon) {
  cfg.validate();
  growth.validate();
  if (!(intersection_month > 0.0 && intersection_month <= horizon))
    throw ParameterError("calibrate_cognition: intersection month outside (0, horizon]");
  const Scenario baseline{growth, mode, {}, "baseline"};

  CognitionParams params;
  params.E = 1.0;
  params.K0 = 1.0;
  params.l = default_coupling(growth, horizon);

  // D_raw(0) = ratio * C(0) fixes k; D_raw(T) = C(T) then fixes lambda.
  const double c0 = log2_complexity(0.0, baseline);
  const double c_t = log2_complexity(intersection_month, baseline);
  const double bracket0 = params.E - params.l * neuron_count(0.0, growth) * neuron_count_derivative(0.0, growth);
  const double bracket_t = params.E - params.l * neuron_count(intersection_month, growth) *
                                          neuron_count_derivative(intersection_month, growth);
  params.k = kNewbornDepthRatio * c0 / (params.K0 * bracket0);
  params.lambda = std::log(c_t / (params.k * params.K0 * bracket_t)) / intersection_month;
  if (!std::isfinite(params.k) || !(params.k > 0.0) || !std::isfinite(params.lambda) || !(params.lambda > 0.0)) {
    std::ostringstream os;
    os << "calibrate_cognition: no positive (k, lambda) solution (k=" << params.k << ", lambda=" << params.lambda
       << ")";
    throw CalibrationError(os.str());
  }
  validate_against(params, growth, horizon);
  return params;
}

std::vector<double> depth_crossings(const CognitionParams& params, const Scenario& scenario, double horizon) {
  std::vector<double> crossings;
  const auto grid = sample_grid(0.0, horizon, 1.0);
  auto gap = [&](double t) { return cognitive_depth_raw(t, params, scenario.growth) - log2_complexity(t, scenario); };
  double prev = gap(grid.front());
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double cur = gap(grid[i]);
    if (std::signbit(prev) != std::signbit(cur)) crossings.push_back(grid[i]);
    prev = cur;
  }
  return crossings;
}

double find_intersection(const CognitionParams& params, const Scenario& scenario, const RootFindConfig& cfg,
                         double horizon) {
  cfg.validate();
  const auto crossings = depth_crossings(params, scenario, horizon);
  if (crossings.size() != 1) {
    std::ostringstream os;
    os << "find_intersection: expected one crossing of depth and complexity, found " << crossings.size();
    if (!crossings.empty()) {
      os << " (months:";
      for (double m : crossings) os << ' ' << m;
      os << ')';
    }
    throw ShapeError(os.str());
  }
  auto gap = [&](double t) { return cognitive_depth_raw(t, params, scenario.growth) - log2_complexity(t, scenario); };
  const double hi = crossings.front();
  return bisect(gap, std::max(0.0, hi - 1.0), hi, cfg).x;
}

Scenario Calibration::baseline() const { return Scenario{growth_fit.growth, LinearExponent{h}, {}, "baseline"}; }

Scenario Calibration::weakened() const {
  return Scenario{growth_fit.growth, DoubleExponential{h, tau_fit.tau}, {}, "exp-weaken"};
}

Calibration calibrate_all(const CalibrationTargets& targets, double h, const RootFindConfig& cfg, double n_max,
                          double horizon) {
  Calibration out;
  out.targets = targets;
  out.h = h;
  out.growth_fit = calibrate_growth(targets, h, cfg, n_max, horizon);
  out.tau_fit = calibrate_weakening_tau(out.growth_fit.growth, h, targets.exp_weaken_equiv, cfg, horizon);
  out.cognition = calibrate_cognition(out.growth_fit.growth, LinearExponent{h}, targets.intersection_month, cfg,
                                      horizon);
  out.intersection_residual =
      find_intersection(out.cognition, out.baseline(), cfg, horizon) - targets.intersection_month;
  return out;
}

}  // namespace cxsim
