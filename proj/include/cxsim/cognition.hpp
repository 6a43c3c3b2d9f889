#pragma once

#include "cxsim/complexity.hpp"
#include "cxsim/scenario.hpp"

namespace cxsim {

// Parameters of cognitive depth D(t) = k K(t) [E - l N(t) N'(t)], where D is
// measured in the same log2-states units as the complexity curve (k carries
// the unit conversion).
struct CognitionParams {
  double k = 1.0;
  double E = 1.0;
  double l = 0.0;
  double lambda = 0.002;  // per month
  double K0 = 1.0;

  void validate() const;  // field domains only; throws ParameterError
  bool operator==(const CognitionParams&) const = default;
};

// Knowledge accumulation curve K(t). Override to try a different
// accumulation law without touching the depth formula.
class KnowledgeModel {
 public:
  virtual ~KnowledgeModel() = default;
  virtual double level(double t, const CognitionParams& params) const = 0;
};

// K(t) = K0 exp(lambda t).
class ExponentialKnowledge final : public KnowledgeModel {
 public:
  double level(double t, const CognitionParams& params) const override;
};

const KnowledgeModel& default_knowledge_model();

double knowledge(double t, const CognitionParams& params);

// E - l N(t) N'(t).
double depth_bracket(double t, const CognitionParams& params, const GrowthParams& growth);

// Scans [0, horizon] on a 1-month grid (plus the analytic worst case) and
// throws ConfigurationError naming the earliest month with a non-positive
// bracket.
void validate_against(const CognitionParams& params, const GrowthParams& growth,
                      double horizon = kDefaultHorizon);

// Unclipped depth. Throws ConfigurationError if the bracket at t is <= 0.
double cognitive_depth_raw(double t, const CognitionParams& params, const GrowthParams& growth,
                           const KnowledgeModel& model = default_knowledge_model());

// min(raw depth, log2 complexity of the scenario).
double cognitive_depth(double t, const CognitionParams& params, const Scenario& scenario,
                       const KnowledgeModel& model = default_knowledge_model());

// Coupling l = 0.5 / max N N' on the horizon: the bracket stays >= E - 0.5.
double default_coupling(const GrowthParams& growth, double horizon = kDefaultHorizon);

}  // namespace cxsim
