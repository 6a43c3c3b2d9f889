#include "cxsim/roots.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cxsim/errors.hpp"

namespace cxsim {

void RootFindConfig::validate() const {
  if (!(abs_tol > 0.0) || !std::isfinite(abs_tol)) throw ParameterError("abs_tol must be > 0");
  if (max_iter < 1) throw ParameterError("max_iter must be >= 1");
  if (!(bracket_expansion > 1.0) || !std::isfinite(bracket_expansion))
    throw ParameterError("bracket_expansion must be > 1");
}

SolveResult bisect(const std::function<double(double)>& f, double lo, double hi,
                   const RootFindConfig& cfg) {
  cfg.validate();
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return {lo, 0};
  if (f_hi == 0.0) return {hi, 0};
  if (std::signbit(f_lo) == std::signbit(f_hi)) throw ShapeError("bisect: root not bracketed");
  for (int i = 1; i <= cfg.max_iter; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid == 0.0) return {mid, i};
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
    if (hi - lo < cfg.abs_tol) return {0.5 * (lo + hi), i};
  }
  throw ConvergenceError("bisect: no convergence in " + std::to_string(cfg.max_iter) + " iterations");
}

SolveResult golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                               const RootFindConfig& cfg) {
  cfg.validate();
  constexpr double inv_phi = std::numbers::phi - 1.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int i = 1; i <= cfg.max_iter; ++i) {
    if (hi - lo < cfg.abs_tol) return {0.5 * (lo + hi), i};
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  throw ConvergenceError("golden-section search: no convergence in " + std::to_string(cfg.max_iter) +
                         " iterations");
}

}  // namespace cxsim
