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

#include "rropt/mechanism.hpp"

#include <cmath>
#include <string>

namespace rropt {

namespace {

void require_probability(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw InvalidArgument(std::string(name) + " must lie in [0, 1], got " +
                          std::to_string(value));
  }
}

}  // namespace

DesignMatrix::DesignMatrix(double p00, double p11) : p00_(p00), p11_(p11) {
  require_probability(p00, "p00");
  require_probability(p11, "p11");
}

PrivacyParams::PrivacyParams(double epsilon, double delta)
    : epsilon_(epsilon), delta_(delta), exp_epsilon_(std::exp(epsilon)) {
  if (!(epsilon >= 0.0)) {
    throw InvalidArgument("epsilon must be non-negative, got " +
                          std::to_string(epsilon));
  }
  require_probability(delta, "delta");
}

ResponseDistribution response_pmf(const DesignMatrix& p, double pi) {
  require_probability(pi, "pi");
  const double signal = pi * (p.diagonal_sum() - 1.0);
  return ResponseDistribution{p.p00() - signal, 1.0 - p.p00() + signal};
}

bool satisfies_dp(const DesignMatrix& p, const PrivacyParams& priv,
                  double tol) {
  if (!(tol >= 0.0)) {
    throw InvalidArgument("tol must be non-negative");
  }
  const double e = priv.exp_epsilon();
  const double d = priv.delta();
  const double p00 = p.p00();
  const double p11 = p.p11();
  return e * (1.0 - p00) + d - p11 >= -tol &&
         e * (1.0 - p11) + d - p00 >= -tol &&
         e * p11 + d - (1.0 - p00) >= -tol &&
         e * p00 + d - (1.0 - p11) >= -tol;
}

std::pair<DesignMatrix, bool> normalize_orientation(const DesignMatrix& p) {
  const double sum = p.diagonal_sum();
  if (std::fabs(sum - 1.0) <= kDegeneracyTol) {
    throw DegenerateMechanism(
        "p00 + p11 = 1: the proportion estimator is undefined");
  }
  if (sum > 1.0) {
    return {p, false};
  }
  return {DesignMatrix(1.0 - p.p00(), 1.0 - p.p11()), true};
}

bool in_region_r_prime(double p00, double p11, const PrivacyParams& priv,
                       double tol) {
  const double e = priv.exp_epsilon();
  const double d = priv.delta();
  return p00 <= 1.0 + tol && p11 <= 1.0 + tol && p00 + p11 > 1.0 &&
         e * (1.0 - p11) + d - p00 >= -tol &&
         e * (1.0 - p00) + d - p11 >= -tol;
}

bool in_region_r_prime(const DesignMatrix& p, const PrivacyParams& priv,
                       double tol) {
  return in_region_r_prime(p.p00(), p.p11(), priv, tol);
}

double boundary_s(double t, const PrivacyParams& priv) {
  return t * (priv.exp_epsilon() + priv.delta()) / (priv.exp_epsilon() + 1.0);
}

double boundary_r(double t, const PrivacyParams& priv) {
  return 1.0 - (boundary_s(t, priv) - priv.delta()) / priv.exp_epsilon();
}

BoundaryPoint boundary_point(double t, const PrivacyParams& priv,
                             Branch branch) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw InvalidArgument("t must lie in [0, 1], got " + std::to_string(t));
  }
  const double r = boundary_r(t, priv);
  const double s = boundary_s(t, priv);
  if (branch == Branch::kDp1Tight) {
    return BoundaryPoint{t, r, s, branch};
  }
  return BoundaryPoint{t, s, r, branch};
}

double t_zero(const PrivacyParams& priv) {
  return priv.delta() * (priv.exp_epsilon() + 1.0) /
         (priv.exp_epsilon() + priv.delta());
}

}  // namespace rropt
