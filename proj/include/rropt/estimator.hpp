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
// Maximum likelihood estimation of the population proportion from
// randomised tallies, with exact variance and margin-of-error bounds.

#ifndef RROPT_ESTIMATOR_HPP_
#define RROPT_ESTIMATOR_HPP_

#include <cstdint>
#include <optional>

#include "rropt/mechanism.hpp"

namespace rropt {

// 95% margin-of-error multipliers on the standard deviation.
inline constexpr double kChebyshev95Factor = 4.5;
inline constexpr double kNormal95Factor = 1.96;

enum class MoeMethod { kChebyshev95, kNormal95 };

// Tally of one survey: n respondents, count_ones randomised 1-responses.
class SurveyOutcome {
 public:
  // Throws InvalidArgument unless n >= 1 and 0 <= count_ones <= n.
  SurveyOutcome(std::int64_t n, std::int64_t count_ones);

  std::int64_t n() const { return n_; }
  std::int64_t count_ones() const { return count_ones_; }

 private:
  std::int64_t n_;
  std::int64_t count_ones_;
};

struct EstimateReport {
  double pi_hat_raw;      // unclamped MLE; may fall outside [0, 1]
  double pi_hat_clamped;  // min(1, max(0, pi_hat_raw))
  double variance;        // at the reference proportion (or the plug-in)
  double moe_chebyshev;
  double moe_normal;
};

// MLE of the population proportion:
//   (p00 - 1) / (p00 + p11 - 1) + N / ((p00 + p11 - 1) * n).
// The raw value is reported without clamping; clamping would change the
// bias properties. Throws DegenerateMechanism when p00 + p11 = 1.
double mle_estimate(const DesignMatrix& p, const SurveyOutcome& outcome);

// Exact variance of the MLE at population proportion pi with n
// respondents, equal to P(X=1)P(X=0) / ((p00 + p11 - 1)^2 * n).
double estimator_variance(const DesignMatrix& p, double pi, std::int64_t n);

// Variance for the symmetric mechanism p00 = p11 = pw. Throws
// DegenerateMechanism when pw = 1/2.
double warner_variance(double pw, double pi, std::int64_t n);

// Half-width of a 95% confidence interval from the estimator variance.
double margin_of_error(double variance, MoeMethod method);

// Full report for one tally. The variance is evaluated at reference_pi
// when supplied, otherwise at the clamped estimate (plug-in).
EstimateReport build_report(const DesignMatrix& p, const SurveyOutcome& outcome,
                            std::optional<double> reference_pi = std::nullopt);

}  // namespace rropt

#endif  // RROPT_ESTIMATOR_HPP_
