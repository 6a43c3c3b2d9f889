#include "cxsim/cognition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "cxsim/errors.hpp"

namespace cxsim {

void CognitionParams::validate() const {
  auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
  if (!positive(k)) throw ParameterError("cognition.k must be > 0");
  if (!positive(E)) throw ParameterError("cognition.E must be > 0");
  if (!std::isfinite(l) || l < 0.0) throw ParameterError("cognition.l must be >= 0");
  if (!positive(lambda)) throw ParameterError("cognition.lambda must be > 0");
  if (!positive(K0)) throw ParameterError("cognition.K0 must be > 0");
}

double ExponentialKnowledge::level(double t, const CognitionParams& params) const {
  return params.K0 * std::exp(params.lambda * t);
}

const KnowledgeModel& default_knowledge_model() {
  static const ExponentialKnowledge model;
  return model;
}

double knowledge(double t, const CognitionParams& params) {
  params.validate();
  return default_knowledge_model().level(t, params);
}

double depth_bracket(double t, const CognitionParams& params, const GrowthParams& growth) {
  return params.E - params.l * neuron_count(t, growth) * neuron_count_derivative(t, growth);
}

void validate_against(const CognitionParams& params, const GrowthParams& growth, double horizon) {
  params.validate();
  growth.validate();
  if (params.E - params.l * max_growth_product(growth, horizon) > 0.0) return;
  for (double t = 0.0; t <= horizon; t += 1.0) {
    if (depth_bracket(t, params, growth) <= 0.0) {
      std::ostringstream os;
      os << "cognition bracket E - l N N' is non-positive at month " << t;
      throw ConfigurationError(os.str(), t);
    }
  }
  // Only the continuous worst case between grid points is bad.
  const double t_worst = growth.tau_g * std::log(2.0 * growth.b);
  std::ostringstream os;
  os << "cognition bracket E - l N N' is non-positive near month " << t_worst;
  throw ConfigurationError(os.str(), t_worst);
}

double cognitive_depth_raw(double t, const CognitionParams& params, const GrowthParams& growth,
                           const KnowledgeModel& model) {
  params.validate();
  const double bracket = depth_bracket(t, params, growth);
  if (!(bracket > 0.0)) {
    std::ostringstream os;
    os << "cognition bracket E - l N N' is non-positive at month " << t;
    throw ConfigurationError(os.str(), t);
  }
  return params.k * model.level(t, params) * bracket;
}

double cognitive_depth(double t, const CognitionParams& params, const Scenario& scenario,
                       const KnowledgeModel& model) {
  return std::min(cognitive_depth_raw(t, params, scenario.growth, model), log2_complexity(t, scenario));
}

double default_coupling(const GrowthParams& growth, double horizon) {
  return 0.5 / max_growth_product(growth, horizon);
}

}  // namespace cxsim
