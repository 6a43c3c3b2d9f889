#include "cxsim/scenario.hpp"

#include <cmath>
#include <sstream>

#include "cxsim/cognition.hpp"
#include "cxsim/errors.hpp"

namespace cxsim {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

double onset_month(const DamageEvent& event) {
  return std::visit(overloaded{[](const SuddenLoss& e) { return e.month; },
                               [](const SustainedLoss& e) { return e.start_month; }},
                    event);
}

double damage_factor(double t, std::span<const DamageEvent> events) {
  double factor = 1.0;
  for (const auto& event : events) {
    std::visit(overloaded{[&](const SuddenLoss& e) {
                            if (t >= e.month) factor *= 1.0 - e.fraction;
                          },
                          [&](const SustainedLoss& e) {
                            if (t > e.start_month) factor *= std::pow(1.0 - e.monthly_rate, t - e.start_month);
                          }},
               event);
  }
  return factor;
}

double effective_neurons(double t, const Scenario& scenario) {
  return neuron_count(t, scenario.growth) * damage_factor(t, scenario.events);
}

double log2_complexity(double t, const Scenario& scenario) {
  return effective_neurons(t, scenario) * base_log2(t, scenario.mode);
}

ValidationReport validate_scenario(const Scenario& scenario, double horizon) {
  ValidationReport report;
  auto& v = report.violations;
  try {
    scenario.growth.validate();
  } catch (const ParameterError& e) {
    v.emplace_back(e.what());
  }
  bool mode_ok = true;
  try {
    validate(scenario.mode);
  } catch (const ParameterError& e) {
    v.emplace_back(e.what());
    mode_ok = false;
  }
  if (mode_ok && base_log2(horizon, scenario.mode) < 0.0) {
    v.emplace_back("mode: per-neuron base drops below one state before the horizon");
  }

  int sustained = 0;
  double previous_onset = -INFINITY;
  for (std::size_t i = 0; i < scenario.events.size(); ++i) {
    const auto& event = scenario.events[i];
    const std::string where = "events[" + std::to_string(i) + "]";
    std::visit(overloaded{[&](const SuddenLoss& e) {
                            if (!(e.fraction > 0.0 && e.fraction < 1.0))
                              v.push_back(where + ": fraction out of (0,1)");
                          },
                          [&](const SustainedLoss& e) {
                            ++sustained;
                            if (!(e.monthly_rate > 0.0 && e.monthly_rate < 1.0))
                              v.push_back(where + ": monthly_rate out of (0,1)");
                          }},
               event);
    const double onset = onset_month(event);
    if (!std::isfinite(onset) || onset < 0.0) {
      v.push_back(where + ": negative month");
    } else if (onset > horizon) {
      v.push_back(where + ": onset month beyond horizon");
    }
    if (onset < previous_onset) v.push_back(where + ": events not sorted by onset month");
    previous_onset = onset;
  }
  if (sustained > 1) v.emplace_back("multiple sustained-loss events");
  return report;
}

void require_valid(const Scenario& scenario, double horizon) {
  const auto report = validate_scenario(scenario, horizon);
  if (report.ok()) return;
  std::ostringstream os;
  os << "invalid scenario '" << scenario.label << "':";
  for (const auto& msg : report.violations) os << "\n  " << msg;
  throw ValidationError(os.str());
}

std::vector<double> sample_grid(double t_start, double t_end, double step) {
  if (!std::isfinite(t_start) || !std::isfinite(t_end) || !(t_start < t_end))
    throw UsageError("sample range requires t_start < t_end");
  if (!std::isfinite(step) || !(step > 0.0)) throw UsageError("sample step must be > 0");
  std::vector<double> grid;
  const double span = t_end - t_start;
  const auto n = static_cast<std::size_t>(std::floor(span / step + 1e-9));
  grid.reserve(n + 2);
  for (std::size_t i = 0; i <= n; ++i) {
    const double t = t_start + static_cast<double>(i) * step;
    if (t > t_end - 1e-9 * step) break;
    grid.push_back(t);
  }
  grid.push_back(t_end);
  return grid;
}

Trajectory simulate(const Scenario& scenario, double t_start, double t_end, double step,
                    const CognitionParams* cognition) {
  Trajectory out;
  out.scenario_label = scenario.label;
  out.months = sample_grid(t_start, t_end, step);
  out.log2_complexity.reserve(out.months.size());
  for (double t : out.months) out.log2_complexity.push_back(log2_complexity(t, scenario));
  if (cognition != nullptr) {
    std::vector<double> depth;
    depth.reserve(out.months.size());
    for (double t : out.months) depth.push_back(cognitive_depth(t, *cognition, scenario));
    out.cognitive_depth = std::move(depth);
  }
  return out;
}

}  // namespace cxsim
