// Copyright 2026 The RROpt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rropt/simulation.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "binomial_oracle.hpp"
#include "doctest.h"
#include "rropt/optimizer.hpp"

using rropt::DesignMatrix;
using rropt::MonteCarloReport;
using rropt::SimulationConfig;

namespace {

// Approximate standard error of the empirical variance of a two-valued
// estimator (n = 1): sqrt((mu4 - sigma^4) / trials).
double variance_standard_error(const DesignMatrix& p, double pi,
                               std::int64_t trials) {
  const double q = rropt::response_pmf(p, pi).p_one;
  const double v0 = rropt::mle_estimate(p, rropt::SurveyOutcome(1, 0));
  const double v1 = rropt::mle_estimate(p, rropt::SurveyOutcome(1, 1));
  const double sigma2 = rropt::estimator_variance(p, pi, 1);
  const double mu4 = (1.0 - q) * std::pow(v0 - pi, 4.0) +
                     q * std::pow(v1 - pi, 4.0);
  return std::sqrt((mu4 - sigma2 * sigma2) / static_cast<double>(trials));
}

}  // namespace

TEST_CASE("simulate_survey degenerate populations") {
  // No signal, no noise.
  const SimulationConfig silent{0.0, 50, 1, 123};
  CHECK(rropt::simulate_survey(DesignMatrix(1.0, 1.0), silent).count_ones() ==
        0);

  // The always-flip mechanism inverts a unanimous population.
  const SimulationConfig unanimous{1.0, 10, 1, 123};
  CHECK(rropt::simulate_survey(DesignMatrix(0.0, 0.0), unanimous)
            .count_ones() == 0);
}

TEST_CASE("simulate_survey frequency matches the response distribution") {
  const SimulationConfig cfg{0.5, 1'000'000, 1, 20260826};
  const auto outcome = rropt::simulate_survey(DesignMatrix(0.75, 0.75), cfg);
  const double frequency =
      static_cast<double>(outcome.count_ones()) / static_cast<double>(cfg.n);
  CHECK(std::fabs(frequency - 0.5) <= 4.0 * std::sqrt(0.25 / 1e6));
}

TEST_CASE("simulation is deterministic in its inputs") {
  const SimulationConfig cfg{0.35, 40, 200, 777};
  const DesignMatrix p(0.8, 0.7);
  const auto first = rropt::monte_carlo(p, cfg);
  const auto second = rropt::monte_carlo(p, cfg);
  CHECK(first.mean_estimate == second.mean_estimate);
  CHECK(first.empirical_variance == second.empirical_variance);
  CHECK(rropt::simulate_survey(p, cfg, 17).count_ones() ==
        rropt::simulate_survey(p, cfg, 17).count_ones());
}

TEST_CASE("monte_carlo validates the closed-form variance") {
  // Direct questioning against the binomial ground truth.
  const auto direct = rropt::monte_carlo(DesignMatrix(1.0, 1.0),
                                         SimulationConfig{0.3, 100, 10'000, 1});
  CHECK(std::fabs(direct.z_score_bias) <= 4.0);
  CHECK(direct.theoretical_variance == doctest::Approx(0.0021));
  CHECK(direct.empirical_variance / direct.theoretical_variance >= 0.9);
  CHECK(direct.empirical_variance / direct.theoretical_variance <= 1.1);

  // Strict-privacy optimum at a tight budget.
  const auto strict = rropt::monte_carlo(
      rropt::optimal_strict(1.0), SimulationConfig{0.25, 500, 10'000, 2});
  CHECK(std::fabs(strict.z_score_bias) <= 4.0);
  CHECK(strict.empirical_variance / strict.theoretical_variance >= 0.9);
  CHECK(strict.empirical_variance / strict.theoretical_variance <= 1.1);
}

TEST_CASE("monte_carlo is unbiased across the proportion range") {
  const DesignMatrix p(0.8, 0.7);
  for (const double pi : {0.1, 0.5, 0.9}) {
    const auto report =
        rropt::monte_carlo(p, SimulationConfig{pi, 50, 10'000, 99});
    CHECK(std::fabs(report.z_score_bias) <= 4.0);
  }
  CHECK_THROWS_AS(
      rropt::monte_carlo(DesignMatrix(0.5, 0.5),
                         SimulationConfig{0.5, 10, 10, 1}),
      rropt::DegenerateMechanism);
}

TEST_CASE("tally distribution matches the binomial law") {
  const DesignMatrix p(0.8, 0.7);
  const double pi = 0.3;
  const std::int64_t n = 9;
  const std::int64_t trials = 10'000;
  const double q = rropt::response_pmf(p, pi).p_one;
  const std::vector<double> pmf = rropt_test::binomial_pmf(n, q);

  std::array<std::int64_t, 10> bins{};
  const SimulationConfig cfg{pi, n, trials, 4242};
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    bins[static_cast<std::size_t>(
        rropt::simulate_survey(p, cfg, trial).count_ones())]++;
  }
  for (std::size_t k = 0; k < bins.size(); ++k) {
    const double expected = static_cast<double>(trials) * pmf[k];
    const double standard_error =
        std::sqrt(static_cast<double>(trials) * pmf[k] * (1.0 - pmf[k]));
    CHECK(std::fabs(static_cast<double>(bins[k]) - expected) <=
          5.0 * standard_error);
  }
}

TEST_CASE("compare_mechanisms shares the truthful population") {
  const DesignMatrix p(0.9, 0.85);
  const std::vector<DesignMatrix> twice{p, p};
  const auto reports =
      rropt::compare_mechanisms(twice, SimulationConfig{0.4, 30, 500, 5});
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].theoretical_variance == reports[1].theoretical_variance);

  // Identity mechanisms see the identical truth stream, so the common
  // random numbers make the tallies coincide exactly.
  const std::vector<DesignMatrix> identities{DesignMatrix(1.0, 1.0),
                                             DesignMatrix(1.0, 1.0)};
  const auto paired = rropt::compare_mechanisms(
      identities, SimulationConfig{0.4, 30, 200, 6});
  CHECK(paired[0].mean_estimate == paired[1].mean_estimate);
  CHECK(paired[0].empirical_variance == paired[1].empirical_variance);
}

TEST_CASE("compare_mechanisms separates the reference comparison pair") {
  const double corner = (std::exp(0.5) + 0.1) / (std::exp(0.5) + 1.0);
  const std::vector<DesignMatrix> pair{DesignMatrix(corner, corner),
                                       DesignMatrix(1.0, 0.1)};
  const SimulationConfig cfg{0.25, 1, 1'000'000, 424242};
  const auto reports = rropt::compare_mechanisms(pair, cfg);
  REQUIRE(reports.size() == 2);
  CHECK(std::fabs(reports[0].theoretical_variance - 2.372) <= 5e-4);
  CHECK(std::fabs(reports[1].theoretical_variance - 2.438) <= 5e-4 + 1e-9);

  const double separation =
      reports[1].empirical_variance - reports[0].empirical_variance;
  const double se0 = variance_standard_error(pair[0], 0.25, cfg.trials);
  const double se1 = variance_standard_error(pair[1], 0.25, cfg.trials);
  CHECK(separation > 4.0 * std::sqrt(se0 * se0 + se1 * se1));
}

TEST_CASE("compare_mechanisms orders the transposed-edge comparison") {
  const double corner =
      (std::exp(0.5) + 1.0 / 3.0) / (std::exp(0.5) + 1.0);
  const std::vector<DesignMatrix> triple{DesignMatrix(1.0 / 3.0, 1.0),
                                         DesignMatrix(corner, corner),
                                         DesignMatrix(1.0, 1.0 / 3.0)};
  const auto reports = rropt::compare_mechanisms(
      triple, SimulationConfig{0.9, 1, 100'000, 31337});
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].empirical_variance < reports[1].empirical_variance);
  CHECK(reports[1].empirical_variance < reports[2].empirical_variance);
  CHECK(reports[0].theoretical_variance == doctest::Approx(0.29));
  CHECK(reports[2].theoretical_variance == doctest::Approx(1.89));
}

TEST_CASE("simulation config validation") {
  const DesignMatrix p(0.8, 0.7);
  CHECK_THROWS_AS(rropt::monte_carlo(p, SimulationConfig{1.5, 10, 10, 1}),
                  rropt::InvalidArgument);
  CHECK_THROWS_AS(rropt::monte_carlo(p, SimulationConfig{0.5, 0, 10, 1}),
                  rropt::InvalidArgument);
  CHECK_THROWS_AS(rropt::monte_carlo(p, SimulationConfig{0.5, 10, 0, 1}),
                  rropt::InvalidArgument);
}
