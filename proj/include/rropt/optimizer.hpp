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
// Closed-form variance-optimal mechanisms under strict and relaxed
// differential privacy, the constrained symmetric family, an independent
// brute-force oracle, and the regime-threshold contour sweep.

#ifndef RROPT_OPTIMIZER_HPP_
#define RROPT_OPTIMIZER_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rropt/mechanism.hpp"

namespace rropt {

// |g(epsilon, delta) - min(pi, 1 - pi)| at or below this band returns
// both candidate mechanisms. Exact equality is measure-zero; callers
// deserve determinism near it.
inline constexpr double kTieTol = 1e-9;

enum class Regime {
  kStrictDp,        // delta = 0: the symmetric strict-privacy optimum
  kCornerInterior,  // symmetric corner (both constraints tight)
  kCornerBoundary,  // unit-square corner (1, delta) or its transpose
  kTie,             // both candidates attain the same variance
  kWarnerDiagonal,  // optimum of the symmetric (Warner) family
};

std::string_view regime_name(Regime regime);

struct OptimalResult {
  // One mechanism, or two exactly when regime == kTie.
  std::vector<DesignMatrix> mechanisms;
  Regime regime;
  // Absent for the strict and Warner paths.
  std::optional<double> g_value;
  // Variance of every listed mechanism at the requested (pi, n).
  double variance_at_pi;
};

struct BruteForceResult {
  DesignMatrix mechanism;
  double variance;
};

struct ContourRow {
  double epsilon;
  double delta;
  double g;  // NaN when singular
  bool singular;
};

// Strict-privacy optimum p00 = p11 = e^eps / (e^eps + 1). Throws
// ZeroEpsilonStrict for epsilon <= 0 (unbounded estimator error).
DesignMatrix optimal_strict(double epsilon);

// Regime threshold g(eps, delta) = delta * (e^eps + delta) /
// (e^eps + 2*delta - 1)^2. Throws SingularThreshold when the denominator
// vanishes (only at epsilon = 0, delta = 0).
double g_threshold(const PrivacyParams& priv);

// Variance-optimal mechanism(s) for a relaxed budget at population
// proportion pi in (0, 1). delta = 0 delegates to optimal_strict. For
// pi <= 1/2 the boundary candidate is (1, delta) and wins when
// g > pi; for pi >= 1/2 the transposed candidate wins when g > 1 - pi;
// otherwise the symmetric corner wins. Within kTieTol of the threshold
// both are returned.
OptimalResult optimal_relaxed(const PrivacyParams& priv, double pi,
                              std::int64_t n = 1);

// Optimum of the symmetric family: pw = (e^eps + delta) / (e^eps + 1).
// Throws ZeroEpsilonStrict when epsilon = 0 and delta = 0.
double optimal_warner(const PrivacyParams& priv);

// Independent oracle: scans a grid x grid lattice over [1/2, 1]^2
// intersected with the feasible region, plus the exact boundary
// candidates on both branches, and returns the variance minimiser. Ties
// break toward the lexicographically smallest (p00, p11), so any
// evaluation order gives the same result. grid must be >= 100.
BruteForceResult brute_force_optimal(const PrivacyParams& priv, double pi,
                                     std::int64_t n, std::int64_t grid);

// g over a row-major (epsilon outer, delta inner) lattice with inclusive
// endpoints. Singular cells are flagged instead of emitted as numbers.
std::vector<ContourRow> contour_sweep(double eps_min, double eps_max,
                                      double delta_min, double delta_max,
                                      std::int64_t resolution);

}  // namespace rropt

#endif  // RROPT_OPTIMIZER_HPP_
