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
// Binary randomised-response mechanisms: design matrices, their response
// distributions, differential-privacy feasibility predicates and the
// parametrisation of the boundary of the feasible region.

#ifndef RROPT_MECHANISM_HPP_
#define RROPT_MECHANISM_HPP_

#include <utility>

#include "rropt/errors.hpp"

namespace rropt {

// Absolute band around p00 + p11 = 1 inside which a mechanism is treated
// as degenerate (the estimator is undefined there).
inline constexpr double kDegeneracyTol = 1e-12;

// Default absolute slack tolerance for feasibility membership. The region
// is exact mathematics; floating point needs an explicit band.
inline constexpr double kFeasibilityTol = 1e-9;

// A 2x2 row-stochastic randomisation: truthful answer j is reported as k
// with probability p_jk, where p_01 = 1 - p00 and p_10 = 1 - p11.
class DesignMatrix {
 public:
  // Throws InvalidArgument unless both retention probabilities lie in
  // [0, 1].
  DesignMatrix(double p00, double p11);

  double p00() const { return p00_; }
  double p11() const { return p11_; }
  // p00 + p11; the mechanism is degenerate when this equals 1.
  double diagonal_sum() const { return p00_ + p11_; }

 private:
  double p00_;
  double p11_;
};

// An (epsilon, delta) privacy budget. e^epsilon is computed once at
// construction; every feasibility constraint reuses it.
class PrivacyParams {
 public:
  // Throws InvalidArgument unless epsilon >= 0 and delta in [0, 1].
  PrivacyParams(double epsilon, double delta);

  double epsilon() const { return epsilon_; }
  double delta() const { return delta_; }
  double exp_epsilon() const { return exp_epsilon_; }

 private:
  double epsilon_;
  double delta_;
  double exp_epsilon_;
};

// Distribution of a single randomised response when the population
// proportion is pi.
struct ResponseDistribution {
  double p_zero;
  double p_one;
};

// Which privacy inequality is tight along a boundary segment:
//   kDp1Tight:  p11 = e^eps * (1 - p00) + delta
//   kDp2Tight:  p00 = e^eps * (1 - p11) + delta
enum class Branch { kDp1Tight, kDp2Tight };

// A point of the boundary parametrisation. The raw coordinates are kept
// unclamped: for t below t_zero the r-coordinate exceeds 1 and the point
// is not a valid design matrix.
struct BoundaryPoint {
  double t;
  double p00;
  double p11;
  Branch branch;
};

// Probability mass function of one randomised response. pi must lie in
// [0, 1].
ResponseDistribution response_pmf(const DesignMatrix& p, double pi);

// Passes one truthful bit through the mechanism, consuming exactly one
// uniform draw from rng (anything with a next_unit() -> double in [0,1)).
template <typename UnitRng>
int randomize(const DesignMatrix& p, int truth, UnitRng& rng) {
  if (truth != 0 && truth != 1) {
    throw InvalidArgument("randomize: truth must be 0 or 1");
  }
  const double keep = truth == 0 ? p.p00() : p.p11();
  return rng.next_unit() < keep ? truth : 1 - truth;
}

// True iff all four privacy inequalities hold with slack >= -tol.
bool satisfies_dp(const DesignMatrix& p, const PrivacyParams& priv,
                  double tol = kFeasibilityTol);

// Swaps response labels when p00 + p11 < 1 so that the returned mechanism
// always has p00 + p11 > 1. The flag records whether a swap happened.
// Throws DegenerateMechanism inside the p00 + p11 = 1 band.
std::pair<DesignMatrix, bool> normalize_orientation(const DesignMatrix& p);

// Membership in the reduced feasible region: p00, p11 <= 1,
// p00 + p11 > 1, and the two active privacy constraints hold within tol.
// The raw-coordinate overload accepts points outside the unit square.
bool in_region_r_prime(double p00, double p11, const PrivacyParams& priv,
                       double tol = kFeasibilityTol);
bool in_region_r_prime(const DesignMatrix& p, const PrivacyParams& priv,
                       double tol = kFeasibilityTol);

// Boundary parametrisation for t in [0, 1]:
//   s(t) = t * (e^eps + delta) / (e^eps + 1)
//   r(t) = 1 - e^-eps * (s(t) - delta)
// kDp1Tight assigns (p00, p11) = (r, s); kDp2Tight the transpose.
double boundary_r(double t, const PrivacyParams& priv);
double boundary_s(double t, const PrivacyParams& priv);
BoundaryPoint boundary_point(double t, const PrivacyParams& priv,
                             Branch branch);

// Parameter value at which the boundary segment meets the unit-square
// edge: boundary_point(t_zero, ., kDp1Tight) = (1, delta).
double t_zero(const PrivacyParams& priv);

// 2xy - x - y + 1 = xy + (1-x)(1-y): the probability that two independent
// Bernoulli(x), Bernoulli(y) draws agree. Non-negative on the unit square
// and zero only at (0, 1) and (1, 0); this is what makes the estimator
// variance monotone in each retention probability.
inline double agreement_form(double x, double y) {
  return 2.0 * x * y - x - y + 1.0;
}

}  // namespace rropt

#endif  // RROPT_MECHANISM_HPP_
