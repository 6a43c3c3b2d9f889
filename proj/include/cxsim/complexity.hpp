#pragma once

#include <numbers>
#include <variant>

namespace cxsim {

// Per-month decay rate of the per-neuron base used by the reference curve.
inline constexpr double kReferenceDecayRate = 0.0001 / 15.0;

inline constexpr double kDefaultHorizon = 1200.0;

// Gompertz neuron-count law N(t) = n_max * exp(-b * exp(-t / tau_g)).
struct GrowthParams {
  double n_max = 1e6;
  double b = 1.0;
  double tau_g = 60.0;  // months

  void validate() const;  // throws ParameterError
  bool operator==(const GrowthParams&) const = default;
};

// Per-neuron base 2 * exp(-h t).
struct LinearExponent {
  double h = kReferenceDecayRate;  // per month
  bool operator==(const LinearExponent&) const = default;
};

// Per-neuron base 2 * exp(-h (exp(t / tau) - 1)).
struct DoubleExponential {
  double h = kReferenceDecayRate;
  double tau = 150.0;  // months
  bool operator==(const DoubleExponential&) const = default;
};

using WeakeningMode = std::variant<LinearExponent, DoubleExponential>;

void validate(const WeakeningMode& mode);  // throws ParameterError

// Neuron count at month t.
double neuron_count(double t, const GrowthParams& growth);

// dN/dt at month t, in neurons per month.
double neuron_count_derivative(double t, const GrowthParams& growth);

// log2 of the per-neuron base at month t; exactly 1 at t = 0.
double base_log2(double t, const WeakeningMode& mode);

// Largest value of N(t) * N'(t) on [0, horizon]. Closed form: with
// u = b exp(-t/tau_g) the product is n_max^2 / tau_g * u exp(-2u), which
// peaks at u = 1/2.
double max_growth_product(const GrowthParams& growth, double horizon = kDefaultHorizon);

}  // namespace cxsim
