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

#include "rropt/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rropt {

namespace {

// Denominator term p00 + p11 - 1, rejecting the degeneracy band.
double effective_signal(double diagonal_sum) {
  const double signal = diagonal_sum - 1.0;
  if (std::fabs(signal) <= kDegeneracyTol) {
    throw DegenerateMechanism(
        "p00 + p11 = 1: the proportion estimator is undefined");
  }
  return signal;
}

void require_sample_size(std::int64_t n) {
  if (n < 1) {
    throw InvalidArgument("n must be at least 1, got " + std::to_string(n));
  }
}

}  // namespace

SurveyOutcome::SurveyOutcome(std::int64_t n, std::int64_t count_ones)
    : n_(n), count_ones_(count_ones) {
  require_sample_size(n);
  if (count_ones < 0 || count_ones > n) {
    throw InvalidArgument("count_ones must lie in [0, n], got " +
                          std::to_string(count_ones));
  }
}

double mle_estimate(const DesignMatrix& p, const SurveyOutcome& outcome) {
  const double signal = effective_signal(p.diagonal_sum());
  const double frequency =
      static_cast<double>(outcome.count_ones()) /
      static_cast<double>(outcome.n());
  return (p.p00() - 1.0) / signal + frequency / signal;
}

double estimator_variance(const DesignMatrix& p, double pi, std::int64_t n) {
  if (!(pi >= 0.0 && pi <= 1.0)) {
    throw InvalidArgument("pi must lie in [0, 1], got " + std::to_string(pi));
  }
  require_sample_size(n);
  const double signal = effective_signal(p.diagonal_sum());
  const double centered = p.p00() - 0.5 - pi * signal;
  return (0.25 - centered * centered) /
         (signal * signal * static_cast<double>(n));
}

double warner_variance(double pw, double pi, std::int64_t n) {
  if (!(pw >= 0.0 && pw <= 1.0)) {
    throw InvalidArgument("pw must lie in [0, 1], got " + std::to_string(pw));
  }
  return estimator_variance(DesignMatrix(pw, pw), pi, n);
}

double margin_of_error(double variance, MoeMethod method) {
  if (!(variance >= 0.0)) {
    throw InvalidArgument("variance must be non-negative, got " +
                          std::to_string(variance));
  }
  const double sigma = std::sqrt(variance);
  return method == MoeMethod::kChebyshev95 ? kChebyshev95Factor * sigma
                                           : kNormal95Factor * sigma;
}

EstimateReport build_report(const DesignMatrix& p, const SurveyOutcome& outcome,
                            std::optional<double> reference_pi) {
  const double raw = mle_estimate(p, outcome);
  const double clamped = std::clamp(raw, 0.0, 1.0);
  const double at_pi = reference_pi.value_or(clamped);
  const double variance = estimator_variance(p, at_pi, outcome.n());
  return EstimateReport{raw, clamped, variance,
                        margin_of_error(variance, MoeMethod::kChebyshev95),
                        margin_of_error(variance, MoeMethod::kNormal95)};
}

}  // namespace rropt
