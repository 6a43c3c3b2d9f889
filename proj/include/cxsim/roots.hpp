#pragma once

#include <functional>

namespace cxsim {

struct RootFindConfig {
  double abs_tol = 1e-3;  // months
  int max_iter = 200;
  double bracket_expansion = 1.6;

  void validate() const;  // throws ParameterError
};

struct SolveResult {
  double x = 0.0;
  int iterations = 0;
};

// Sign-change bisection on [lo, hi]. f(lo) and f(hi) must differ in sign
// (zero counts as a root). Throws ConvergenceError after max_iter halvings.
SolveResult bisect(const std::function<double(double)>& f, double lo, double hi,
                   const RootFindConfig& cfg);

// Golden-section search for the maximum of a unimodal f on [lo, hi].
SolveResult golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                               const RootFindConfig& cfg);

}  // namespace cxsim
