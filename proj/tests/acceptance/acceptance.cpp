// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cxsim/calibration.hpp"
#include "cxsim/combinatorics.hpp"
#include "cxsim/errors.hpp"
#include "cxsim/io.hpp"

using namespace cxsim;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> missed;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      missed.push_back(what);
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Scenario with_events(Scenario s, std::vector<DamageEvent> events, std::string label) {
  s.events = std::move(events);
  s.label = std::move(label);
  return s;
}

// Equivalent age at month 1000, or nullopt when the value is off the branch.
struct Equiv {
  std::optional<double> month;
  std::string error;
};

Equiv equiv_at_1000(const Scenario& s, const AscendingBranch& branch) {
  try {
    return {branch.invert(log2_complexity(1000.0, s)), {}};
  } catch (const RangeError& e) {
    return {std::nullopt, e.side() == RangeError::Side::Below ? "below-range" : "above-range"};
  }
}

std::string show(const Equiv& e) {
  if (!e.month) return e.error;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", *e.month);
  return buf;
}

struct Scenarios {
  Scenario baseline, sudden, weakened, combined, sustained;
};

Scenarios reference_scenarios(const Calibration& cal) {
  const auto base = cal.baseline();
  const auto weak = cal.weakened();
  return {base,
          with_events(base, {SuddenLoss{600.0, 0.05}}, "sudden-5%@600"),
          weak,
          with_events(weak, {SuddenLoss{600.0, 0.05}}, "combined"),
          with_events(base, {SustainedLoss{300.0, 0.0005}}, "sustained-0.05%@300")};
}

Outcome ac1_calibration() {
  Outcome o;
  const auto start = Clock::now();
  const RootFindConfig cfg;
  const auto fit = calibrate_growth(CalibrationTargets{}, kReferenceDecayRate, cfg);
  const Scenario base{fit.growth, LinearExponent{}, {}, "baseline"};
  const double peak = find_peak(base, cfg);
  const double age = equivalent_age(base, 1000.0, base, cfg);
  const double elapsed = seconds_since(start);
  o.detail << "peak=" << peak << " equiv(1000)=" << age << " b=" << fit.growth.b << " tau_g=" << fit.growth.tau_g
           << " time=" << elapsed << "s";
  o.require(std::abs(peak - 300.0) <= 1.0, "peak 300 +/- 1");
  o.require(std::abs(age - 138.0) <= 1.0, "equiv 138 +/- 1");
  o.require(elapsed < 2.0, "runtime < 2 s");
  return o;
}

Outcome ac2_tau(const Calibration& cal) {
  Outcome o;
  const auto start = Clock::now();
  const RootFindConfig cfg;
  const auto tau = calibrate_weakening_tau(cal.growth_fit.growth, kReferenceDecayRate, cal.targets.exp_weaken_equiv, cfg);
  const Scenario weak{cal.growth_fit.growth, DoubleExponential{kReferenceDecayRate, tau.tau}, {}, "w"};
  const double age = equivalent_age(weak, 1000.0, cal.baseline(), cfg);
  const double elapsed = seconds_since(start);
  o.detail << "tau=" << tau.tau << " equiv(1000)=" << age << " time=" << elapsed << "s";
  o.require(std::abs(age - 97.0) <= 1.0, "equiv 97 +/- 1");
  o.require(elapsed < 2.0, "runtime < 2 s");
  return o;
}

Outcome ac3_cross_validation(const Calibration& cal) {
  Outcome o;
  const auto s = reference_scenarios(cal);
  const AscendingBranch branch(s.baseline, RootFindConfig{});
  const auto base = equiv_at_1000(s.baseline, branch);
  const auto sudden = equiv_at_1000(s.sudden, branch);
  const auto weak = equiv_at_1000(s.weakened, branch);
  const auto combined = equiv_at_1000(s.combined, branch);
  const auto sustained = equiv_at_1000(s.sustained, branch);

  auto band = [&](const char* name, const Equiv& e, double lo, double hi, double expected) {
    o.detail << name << "=" << show(e);
    if (e.month) o.detail << " (reference " << expected << ", residual " << *e.month - expected << ")";
    o.detail << "; ";
    o.require(e.month && *e.month >= lo && *e.month <= hi,
              std::string(name) + " in [" + std::to_string(int(lo)) + "," + std::to_string(int(hi)) + "]");
  };
  band("sudden", sudden, 108.0, 128.0, 118.0);
  band("combined", combined, 75.0, 95.0, 85.0);
  band("sustained", sustained, 30.0, 60.0, 45.0);

  // An off-branch-below value is older-equivalent to nothing: rank it lowest.
  auto rank = [](const Equiv& e) -> double {
    if (e.month) return *e.month;
    return e.error == "below-range" ? -INFINITY : INFINITY;
  };
  const bool ordered = rank(base) > rank(sudden) && rank(sudden) > rank(weak) && rank(weak) > rank(combined) &&
                       rank(combined) > rank(sustained);
  o.detail << "baseline=" << show(base) << "; weakened=" << show(weak);
  o.require(ordered, "strict ordering 138 > sudden > 97-curve > combined > sustained");
  return o;
}

Outcome ac4_intersection(const Calibration& cal) {
  Outcome o;
  const auto base = cal.baseline();
  const double cross = find_intersection(cal.cognition, base);
  o.detail << "intersection=" << cross;
  o.require(std::abs(cross - 600.0) <= 2.0, "intersection 600 +/- 2");
  int violations = 0;
  for (const double t : sample_grid(0.0, 1200.0, 1.0))
    if (!(cognitive_depth(t, cal.cognition, base) <= log2_complexity(t, base))) ++violations;
  o.detail << " clip violations=" << violations;
  o.require(violations == 0, "depth <= complexity at every month");
  return o;
}

Outcome ac5_combinatorics() {
  Outcome o;
  const auto start = Clock::now();
  int mismatches = 0;
  for (unsigned n = 1; n <= 16; ++n) {
    const auto hist = enumerate_states(n);
    for (unsigned k = 0; k <= n; ++k)
      if (BigInt(hist.counts[k]) != states_with_n_firing(n, k)) ++mismatches;
    if (hist.total() != (BigInt(1) << n) || total_states(n) != (BigInt(1) << n)) ++mismatches;
  }
  const double elapsed = seconds_since(start);
  o.detail << "mismatches=" << mismatches << " time=" << elapsed << "s";
  o.require(mismatches == 0, "exact equality for N = 1..16");
  o.require(elapsed < 5.0, "runtime < 5 s");
  return o;
}

Outcome ac6_scaling(const Calibration& cal) {
  Outcome o;
  const auto big_cal = calibrate_all(CalibrationTargets{}, kReferenceDecayRate, RootFindConfig{}, 1e7);
  double worst = 0.0;
  auto compare_sets = [&](const Scenarios& a, const Scenarios& b, const char* tag) {
    const AscendingBranch ba(a.baseline, RootFindConfig{});
    const AscendingBranch bb(b.baseline, RootFindConfig{});
    const std::vector<std::pair<const Scenario*, const Scenario*>> pairs{
        {&a.baseline, &b.baseline}, {&a.sudden, &b.sudden}, {&a.weakened, &b.weakened},
        {&a.combined, &b.combined}, {&a.sustained, &b.sustained}};
    for (const auto& [x, y] : pairs) {
      const auto ex = equiv_at_1000(*x, ba);
      const auto ey = equiv_at_1000(*y, bb);
      if (ex.month && ey.month) {
        worst = std::max(worst, std::abs(*ex.month - *ey.month));
      } else {
        o.require(ex.error == ey.error, std::string(tag) + " " + x->label + " range status changed");
      }
    }
  };
  // Same shape, n_max x10.
  auto scaled = cal;
  scaled.growth_fit.growth.n_max *= 10.0;
  compare_sets(reference_scenarios(cal), reference_scenarios(scaled), "scaled");
  // Full recalibration at n_max x10.
  compare_sets(reference_scenarios(cal), reference_scenarios(big_cal), "recalibrated");
  o.detail << "max |delta equiv| = " << worst << " months";
  o.require(worst < 0.01, "equivalent ages change < 0.01 month");
  return o;
}

Outcome ac7_derivative(const Calibration& cal) {
  Outcome o;
  constexpr double step = 1e-4;
  double worst = 0.0;
  int samples = 0;
  for (const GrowthParams& g : {cal.growth_fit.growth, GrowthParams{1000.0, 5.0, 60.0}}) {
    for (int i = 0; i < 50; ++i, ++samples) {
      const double t = 500.0 * i / 49.0 + (i == 0 ? step : 0.0);
      const double fd = (neuron_count(t + step, g) - neuron_count(t - step, g)) / (2 * step);
      const double exact = neuron_count_derivative(t, g);
      worst = std::max(worst, std::abs(fd - exact) / std::abs(exact));
    }
  }
  o.detail << samples << " samples, max rel error=" << worst;
  o.require(samples == 100 && worst < 1e-4, "relative error < 1e-4");
  return o;
}

Outcome ac8_damage(const Calibration& cal) {
  Outcome o;
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> month(0.0, 1200.0), fraction(1e-4, 0.95), rate(1e-6, 0.01);
  std::uniform_real_distribution<double> b(0.02, 5.0), tau_g(10.0, 300.0), tau(60.0, 2000.0);
  std::bernoulli_distribution coin(0.5);
  int increases = 0, draws = 0, causality = 0;
  while (draws < 1000) {
    Scenario s{GrowthParams{1e6, b(rng), tau_g(rng)},
               coin(rng) ? WeakeningMode{LinearExponent{}} : WeakeningMode{DoubleExponential{kReferenceDecayRate, tau(rng)}},
               {},
               "draw"};
    if (coin(rng)) s.events.push_back(SuddenLoss{month(rng), fraction(rng)});
    if (!validate_scenario(s).ok()) continue;
    ++draws;
    const DamageEvent extra = coin(rng) ? DamageEvent{SuddenLoss{month(rng), fraction(rng)}}
                                        : DamageEvent{SustainedLoss{month(rng), rate(rng)}};
    Scenario damaged = s;
    damaged.events.push_back(extra);
    std::sort(damaged.events.begin(), damaged.events.end(),
              [](const auto& x, const auto& y) { return onset_month(x) < onset_month(y); });
    const auto a = simulate(s, 0.0, 1200.0, 5.0);
    const auto d = simulate(damaged, 0.0, 1200.0, 5.0);
    for (std::size_t i = 0; i < a.months.size(); ++i) {
      if (d.log2_complexity[i] > a.log2_complexity[i]) ++increases;
      if (a.months[i] < onset_month(extra) && d.log2_complexity[i] != a.log2_complexity[i]) ++causality;
    }
  }

  const auto base = simulate(cal.baseline(), 0.0, 1200.0, 1.0);
  const auto hit = simulate(with_events(cal.baseline(), {SuddenLoss{600.0, 0.05}}, "s"), 0.0, 1200.0, 1.0);
  double base_max = 0.0;
  for (std::size_t i = 1; i < base.months.size(); ++i)
    base_max = std::max(base_max, std::abs(base.log2_complexity[i] - base.log2_complexity[i - 1]));
  int rough = 0;
  for (std::size_t i = 1; i < hit.months.size(); ++i) {
    if (hit.months[i] == 600.0) continue;
    if (std::abs(hit.log2_complexity[i] - hit.log2_complexity[i - 1]) > 1.05 * base_max) ++rough;
  }
  o.detail << draws << " draws, increases=" << increases << " causality breaks=" << causality
           << " non-smooth steps away from onset=" << rough;
  o.require(increases == 0, "damage never increases complexity");
  o.require(causality == 0, "identical before onset");
  o.require(rough == 0, "smooth away from onset");
  return o;
}

Outcome ac9_determinism(const Calibration& cal) {
  Outcome o;
  const auto dir = fs::temp_directory_path() / "cxsim_acceptance";
  fs::create_directories(dir);
  const auto s = reference_scenarios(cal);

  auto produce = [&](const std::string& tag) {
    const auto again = calibrate_all(CalibrationTargets{});
    const auto traj = simulate(s.combined, 0.0, 1200.0, 1.0, &again.cognition);
    write_trajectory_csv(traj, dir / ("t" + tag + ".csv"));
    const std::vector<Trajectory> both{simulate(s.baseline, 0.0, 1200.0, 1.0), simulate(s.weakened, 0.0, 1200.0, 1.0)};
    emit_plot_svg(both, dir / ("p" + tag + ".svg"), PlotOptions{"fig", PlotOptions::YMode::Log2, std::nullopt});
    write_text_file(dir / ("c" + tag + ".json"), params_json(CalibrationRecord{again, RootFindConfig{}, 1200.0}));
    return read_text_file(dir / ("t" + tag + ".csv")) + read_text_file(dir / ("p" + tag + ".svg")) +
           read_text_file(dir / ("c" + tag + ".json"));
  };
  o.require(produce("1") == produce("2"), "byte-identical repeated runs");

  const auto traj = simulate(s.combined, 0.0, 1200.0, 0.37, &cal.cognition);
  write_trajectory_csv(traj, dir / "rt.csv");
  const auto back = read_trajectory_csv(dir / "rt.csv");
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.months.size(); ++i) {
    auto rel = [](double a, double b) { return a == b ? 0.0 : std::abs(a - b) / std::max(std::abs(a), std::abs(b)); };
    worst = std::max({worst, rel(traj.months[i], back.months[i]),
                      rel(traj.log2_complexity[i], back.log2_complexity[i]),
                      rel((*traj.cognitive_depth)[i], (*back.cognitive_depth)[i])});
  }
  o.detail << "max round-trip rel error=" << worst;
  o.require(back.months.size() == traj.months.size() && worst <= 5e-9, "9 significant digits preserved");
  return o;
}

}  // namespace

int main() {
  const auto cal = calibrate_all(CalibrationTargets{});
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 calibration convergence (peak 300, equiv 138)", [] { return ac1_calibration(); }},
      {"AC2 weakening tau calibration (equiv 97)", [&] { return ac2_tau(cal); }},
      {"AC3 cross-validation bands and ordering", [&] { return ac3_cross_validation(cal); }},
      {"AC4 intersection at 600 and clip", [&] { return ac4_intersection(cal); }},
      {"AC5 combinatorial oracle equivalence", [] { return ac5_combinatorics(); }},
      {"AC6 scaling invariance", [&] { return ac6_scaling(cal); }},
      {"AC7 derivative vs finite differences", [&] { return ac7_derivative(cal); }},
      {"AC8 damage properties", [&] { return ac8_damage(cal); }},
      {"AC9 determinism and CSV round trip", [&] { return ac9_determinism(cal); }},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.str().c_str());
    for (const auto& what : o.missed) std::printf("       missed: %s\n", what.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
