#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cxsim/complexity.hpp"

namespace cxsim {

struct CognitionParams;

// Instantaneous loss of `fraction` of the neurons at `month`.
struct SuddenLoss {
  double month = 0.0;
  double fraction = 0.0;
  bool operator==(const SuddenLoss&) const = default;
};

// Compounding loss of `monthly_rate` per month from `start_month` onwards.
struct SustainedLoss {
  double start_month = 0.0;
  double monthly_rate = 0.0;
  bool operator==(const SustainedLoss&) const = default;
};

using DamageEvent = std::variant<SuddenLoss, SustainedLoss>;

double onset_month(const DamageEvent& event);

struct Scenario {
  GrowthParams growth;
  WeakeningMode mode = LinearExponent{};
  std::vector<DamageEvent> events;  // sorted by onset month
  std::string label = "baseline";

  bool operator==(const Scenario&) const = default;
};

struct Trajectory {
  std::vector<double> months;
  std::vector<double> log2_complexity;
  std::optional<std::vector<double>> cognitive_depth;
  std::string scenario_label;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Multiplicative factor in (0, 1] applied to the baseline neuron count.
double damage_factor(double t, std::span<const DamageEvent> events);

double effective_neurons(double t, const Scenario& scenario);

// log2 of the network state count: effective_neurons * base_log2.
double log2_complexity(double t, const Scenario& scenario);

// Reports every invariant violation; never throws and never mutates input.
ValidationReport validate_scenario(const Scenario& scenario, double horizon = kDefaultHorizon);

// Throws ValidationError listing every violation when the report is not ok.
void require_valid(const Scenario& scenario, double horizon = kDefaultHorizon);

// The sample grid t_start, t_start + step, ... closed with t_end.
std::vector<double> sample_grid(double t_start, double t_end, double step);

Trajectory simulate(const Scenario& scenario, double t_start, double t_end, double step,
                    const CognitionParams* cognition = nullptr);

}  // namespace cxsim
