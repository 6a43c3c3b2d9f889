#include "cxsim/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cxsim/errors.hpp"

namespace cxsim {
namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

void GrowthParams::validate() const {
  if (!positive_finite(n_max)) throw ParameterError("growth.n_max must be > 0, got " + std::to_string(n_max));
  if (!positive_finite(b)) throw ParameterError("growth.b must be > 0, got " + std::to_string(b));
  if (!positive_finite(tau_g)) throw ParameterError("growth.tau_g must be > 0, got " + std::to_string(tau_g));
}

void validate(const WeakeningMode& mode) {
  std::visit(
      [](const auto& m) {
        if (!std::isfinite(m.h) || m.h < 0.0) throw ParameterError("mode.h must be >= 0, got " + std::to_string(m.h));
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, DoubleExponential>) {
          if (!positive_finite(m.tau)) throw ParameterError("mode.tau must be > 0, got " + std::to_string(m.tau));
        }
      },
      mode);
}

double neuron_count(double t, const GrowthParams& growth) {
  growth.validate();
  return growth.n_max * std::exp(-growth.b * std::exp(-t / growth.tau_g));
}

double neuron_count_derivative(double t, const GrowthParams& growth) {
  growth.validate();
  const double u = growth.b * std::exp(-t / growth.tau_g);
  return growth.n_max * std::exp(-u) * u / growth.tau_g;
}

double base_log2(double t, const WeakeningMode& mode) {
  validate(mode);
  if (t < 0.0) throw ParameterError("base_log2: t must be >= 0, got " + std::to_string(t));
  constexpr double log2e = std::numbers::log2e;
  return std::visit(
      [&](const auto& m) -> double {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, LinearExponent>) {
          return 1.0 - m.h * t * log2e;
        } else {
          return 1.0 - m.h * std::expm1(t / m.tau) * log2e;
        }
      },
      mode);
}

double max_growth_product(const GrowthParams& growth, double horizon) {
  growth.validate();
  const double u_start = growth.b;
  const double u_end = growth.b * std::exp(-horizon / growth.tau_g);
  // u decreases with t; clamp the stationary point into [u_end, u_start].
  const double u = std::clamp(0.5, u_end, u_start);
  return growth.n_max * growth.n_max / growth.tau_g * u * std::exp(-2.0 * u);
}

}  // namespace cxsim
