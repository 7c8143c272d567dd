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
//
// Survey simulation and Monte Carlo validation of the estimator's
// bias and variance.

#ifndef RROPT_SIMULATION_HPP_
#define RROPT_SIMULATION_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "rropt/estimator.hpp"
#include "rropt/mechanism.hpp"

namespace rropt {

struct SimulationConfig {
  double pi_true;        // population proportion generating the truth bits
  std::int64_t n;        // respondents per survey
  std::int64_t trials;   // independent surveys
  std::uint64_t seed;    // root of every random stream
};

struct MonteCarloReport {
  double mean_estimate;
  double empirical_variance;    // trials - 1 divisor
  double theoretical_variance;  // closed form at pi_true
  double z_score_bias;          // (mean - pi) in standard errors of the mean
  std::int64_t trials;
};

// One survey: n truthful bits drawn i.i.d. Bernoulli(pi_true), each passed
// through the mechanism. Deterministic in (cfg.seed, trial_index,
// mechanism_index) regardless of evaluation order.
SurveyOutcome simulate_survey(const DesignMatrix& p,
                              const SimulationConfig& cfg,
                              std::int64_t trial_index = 0,
                              std::uint64_t mechanism_index = 0);

// cfg.trials independent surveys, one MLE each.
MonteCarloReport monte_carlo(const DesignMatrix& p,
                             const SimulationConfig& cfg);

// One report per mechanism under a shared truthful population (common
// random numbers for the truth bits, an independent coin stream per
// mechanism), enabling paired comparisons.
std::vector<MonteCarloReport> compare_mechanisms(
    std::span<const DesignMatrix> mechanisms, const SimulationConfig& cfg);

}  // namespace rropt

#endif  // RROPT_SIMULATION_HPP_
