#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cxsim/errors.hpp"
#include "cxsim/scenario.hpp"
#include "test_support.hpp"

using namespace cxsim;

TEST_CASE("neuron_count follows the Gompertz law") {
  const GrowthParams g{1000.0, 5.0, 60.0};
  CHECK(neuron_count(0.0, g) == doctest::Approx(6.737946999085467).epsilon(1e-12));
  CHECK(neuron_count(60.0 * std::log(5.0), g) == doctest::Approx(1000.0 / std::numbers::e).epsilon(1e-12));
  CHECK(neuron_count(1e6, g) == doctest::Approx(1000.0));

  double prev = neuron_count(0.0, g);
  for (double t = 1.0; t <= 1200.0; t += 1.0) {
    const double cur = neuron_count(t, g);
    REQUIRE(cur > prev);
    REQUIRE(cur <= g.n_max);
    prev = cur;
  }
}

TEST_CASE("neuron_count_derivative") {
  const GrowthParams g{1000.0, 5.0, 60.0};
  CHECK(neuron_count_derivative(60.0 * std::log(5.0), g) == doctest::Approx(6.1313240195240395).epsilon(1e-12));
  CHECK(neuron_count_derivative(1e5, g) == doctest::Approx(0.0));

  SUBCASE("matches central finite differences") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> t_dist(0.0, 1200.0), b_dist(0.05, 8.0), tau_dist(10.0, 200.0);
    constexpr double step = 1e-4;
    for (int i = 0; i < 200; ++i) {
      const GrowthParams rg{1e6, b_dist(rng), tau_dist(rng)};
      const double t = t_dist(rng);
      const double fd = (neuron_count(t + step, rg) - neuron_count(t - step, rg)) / (2 * step);
      const double analytic = neuron_count_derivative(t, rg);
      REQUIRE(analytic > 0.0);
      // Deep in the plateau N' / N is below what a 1e-4 step can resolve in
      // double precision.
      const double rounding = 2.2e-16 * neuron_count(t, rg) / (analytic * step);
      if (rounding > 1e-5) continue;
      CHECK(test::rel_close(analytic, fd, 1e-4));
    }
  }
}

TEST_CASE("invalid growth parameters are rejected") {
  CHECK_THROWS_AS(neuron_count(0.0, GrowthParams{0.0, 1.0, 1.0}), ParameterError);
  CHECK_THROWS_AS(neuron_count(0.0, GrowthParams{1.0, -1.0, 1.0}), ParameterError);
  CHECK_THROWS_AS(neuron_count_derivative(0.0, GrowthParams{1.0, 1.0, 0.0}), ParameterError);
  CHECK_THROWS_AS(neuron_count(0.0, GrowthParams{NAN, 1.0, 1.0}), ParameterError);
}

TEST_CASE("base_log2") {
  const WeakeningMode lin = LinearExponent{kReferenceDecayRate};
  const WeakeningMode dbl = DoubleExponential{kReferenceDecayRate, 150.0};
  CHECK(base_log2(0.0, lin) == 1.0);
  CHECK(base_log2(0.0, dbl) == 1.0);
  CHECK(base_log2(1000.0, lin) == doctest::Approx(0.9903820330607402).epsilon(1e-12));
  CHECK(base_log2(150.0 * std::numbers::ln2, dbl) ==
        doctest::Approx(1.0 - kReferenceDecayRate * std::numbers::log2e).epsilon(1e-14));

  SUBCASE("non-increasing in t") {
    for (const auto& mode : {lin, dbl, WeakeningMode{DoubleExponential{0.01, 20.0}}}) {
      double prev = base_log2(0.0, mode);
      for (double t = 0.5; t <= 1200.0; t += 0.5) {
        const double cur = base_log2(t, mode);
        REQUIRE(cur <= prev);
        prev = cur;
      }
    }
  }

  SUBCASE("double exponential below linear where exp(t/tau) - 1 >= t") {
    for (double tau : {50.0, 100.0, 150.0}) {
      const WeakeningMode d = DoubleExponential{kReferenceDecayRate, tau};
      for (double t = 1.0; t <= 1200.0; t += 1.0) {
        if (std::expm1(t / tau) >= t) CHECK(base_log2(t, d) <= base_log2(t, lin));
      }
    }
  }

  CHECK_THROWS_AS(base_log2(1.0, WeakeningMode{LinearExponent{-1.0}}), ParameterError);
  CHECK_THROWS_AS(base_log2(1.0, WeakeningMode{DoubleExponential{1e-5, 0.0}}), ParameterError);
  CHECK_THROWS_AS(base_log2(-1.0, lin), ParameterError);
}

TEST_CASE("log2_complexity") {
  const Scenario s{GrowthParams{1e6, 0.08, 61.0}, LinearExponent{}, {}, "s"};
  CHECK(log2_complexity(0.0, s) == neuron_count(0.0, s.growth));

  SUBCASE("linear in n_max") {
    Scenario doubled = s;
    doubled.growth.n_max *= 2.0;
    Scenario scaled = s;
    scaled.growth.n_max *= 3.7;
    for (double t = 0.0; t <= 1200.0; t += 7.0) {
      CHECK(log2_complexity(t, doubled) == 2.0 * log2_complexity(t, s));
      CHECK(log2_complexity(t, scaled) == doctest::Approx(3.7 * log2_complexity(t, s)).epsilon(1e-14));
    }
  }

  SUBCASE("constant N with h = 0 is N bits at every t") {
    const auto flat = test::flat_scenario(12.0, 0.0);
    for (double t : {0.0, 1.0, 300.0, 1200.0}) CHECK(log2_complexity(t, flat) == 12.0);
  }
}

TEST_CASE("max_growth_product matches a dense scan") {
  for (const GrowthParams g : {GrowthParams{1e6, 5.0, 60.0}, GrowthParams{1e6, 0.0795, 61.2}, GrowthParams{10.0, 0.7, 300.0}}) {
    double best = 0.0;
    for (double t = 0.0; t <= 1200.0; t += 0.01)
      best = std::max(best, neuron_count(t, g) * neuron_count_derivative(t, g));
    CHECK(max_growth_product(g) == doctest::Approx(best).epsilon(1e-6));
  }
}
