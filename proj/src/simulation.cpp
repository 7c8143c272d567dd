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

#include <cmath>
#include <string>

#include "rropt/random.hpp"

namespace rropt {

namespace {

void validate_config(const SimulationConfig& cfg) {
  if (!(cfg.pi_true >= 0.0 && cfg.pi_true <= 1.0)) {
    throw InvalidArgument("pi_true must lie in [0, 1], got " +
                          std::to_string(cfg.pi_true));
  }
  if (cfg.n < 1) {
    throw InvalidArgument("n must be at least 1");
  }
  if (cfg.trials < 1) {
    throw InvalidArgument("trials must be at least 1");
  }
}

std::int64_t survey_count(const DesignMatrix& p, const SimulationConfig& cfg,
                          std::int64_t trial, std::uint64_t mechanism_index) {
  const std::uint64_t t = static_cast<std::uint64_t>(trial);
  const std::uint64_t coins = coin_stream(mechanism_index);
  std::int64_t count = 0;
  for (std::int64_t i = 0; i < cfg.n; ++i) {
    const std::uint64_t r = static_cast<std::uint64_t>(i);
    const int truth =
        unit_draw(cfg.seed, t, r, kTruthStream) < cfg.pi_true ? 1 : 0;
    const double keep = truth == 0 ? p.p00() : p.p11();
    const int response =
        unit_draw(cfg.seed, t, r, coins) < keep ? truth : 1 - truth;
    count += response;
  }
  return count;
}

MonteCarloReport run_trials(const DesignMatrix& p, const SimulationConfig& cfg,
                            std::uint64_t mechanism_index) {
  validate_config(cfg);
  const double theoretical = estimator_variance(p, cfg.pi_true, cfg.n);

  // Welford accumulation; single pass, numerically stable.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::int64_t trial = 0; trial < cfg.trials; ++trial) {
    const SurveyOutcome outcome(
        cfg.n, survey_count(p, cfg, trial, mechanism_index));
    const double estimate = mle_estimate(p, outcome);
    const double delta = estimate - mean;
    mean += delta / static_cast<double>(trial + 1);
    m2 += delta * (estimate - mean);
  }
  const double variance =
      cfg.trials > 1 ? m2 / static_cast<double>(cfg.trials - 1) : 0.0;
  const double z =
      (mean - cfg.pi_true) *
      std::sqrt(static_cast<double>(cfg.trials) / theoretical);
  return MonteCarloReport{mean, variance, theoretical, z, cfg.trials};
}

}  // namespace

SurveyOutcome simulate_survey(const DesignMatrix& p,
                              const SimulationConfig& cfg,
                              std::int64_t trial_index,
                              std::uint64_t mechanism_index) {
  validate_config(cfg);
  if (trial_index < 0) {
    throw InvalidArgument("trial_index must be non-negative");
  }
  return SurveyOutcome(cfg.n,
                       survey_count(p, cfg, trial_index, mechanism_index));
}

MonteCarloReport monte_carlo(const DesignMatrix& p,
                             const SimulationConfig& cfg) {
  return run_trials(p, cfg, /*mechanism_index=*/0);
}

std::vector<MonteCarloReport> compare_mechanisms(
    std::span<const DesignMatrix> mechanisms, const SimulationConfig& cfg) {
  std::vector<MonteCarloReport> reports;
  reports.reserve(mechanisms.size());
  for (std::size_t index = 0; index < mechanisms.size(); ++index) {
    reports.push_back(run_trials(mechanisms[index], cfg, index));
  }
  return reports;
}

}  // namespace rropt
