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

#include "rropt/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rropt/estimator.hpp"

namespace rropt {

namespace {

constexpr double kSingularBand = 1e-12;

void require_open_unit(double pi) {
  if (!(pi > 0.0 && pi < 1.0)) {
    throw InvalidArgument(
        "pi must lie strictly inside (0, 1); the optimum is not unique at "
        "the endpoints, got " +
        std::to_string(pi));
  }
}

// Symmetric extreme point (e^eps + delta) / (e^eps + 1) on the diagonal.
double corner_retention(const PrivacyParams& priv) {
  return (priv.exp_epsilon() + priv.delta()) / (priv.exp_epsilon() + 1.0);
}

OptimalResult make_result(std::vector<DesignMatrix> mechanisms, Regime regime,
                          std::optional<double> g, double pi, std::int64_t n) {
  const double variance = estimator_variance(mechanisms.front(), pi, n);
  return OptimalResult{std::move(mechanisms), regime, g, variance};
}

}  // namespace

std::string_view regime_name(Regime regime) {
  switch (regime) {
    case Regime::kStrictDp:
      return "StrictDP";
    case Regime::kCornerInterior:
      return "CornerInterior";
    case Regime::kCornerBoundary:
      return "CornerBoundary";
    case Regime::kTie:
      return "Tie";
    case Regime::kWarnerDiagonal:
      return "WarnerDiagonal";
  }
  return "Unknown";
}

DesignMatrix optimal_strict(double epsilon) {
  if (!(epsilon > 0.0)) {
    throw ZeroEpsilonStrict(
        "epsilon must be positive under strict privacy: epsilon = 0 forces "
        "identical rows and unbounded estimator error");
  }
  const double retention = std::exp(epsilon) / (std::exp(epsilon) + 1.0);
  return DesignMatrix(retention, retention);
}

double g_threshold(const PrivacyParams& priv) {
  const double denom = priv.exp_epsilon() + 2.0 * priv.delta() - 1.0;
  if (std::fabs(denom) <= kSingularBand) {
    throw SingularThreshold(
        "g(epsilon, delta) is undefined: e^epsilon + 2*delta - 1 = 0");
  }
  return priv.delta() * (priv.exp_epsilon() + priv.delta()) / (denom * denom);
}

OptimalResult optimal_relaxed(const PrivacyParams& priv, double pi,
                              std::int64_t n) {
  require_open_unit(pi);
  const double delta = priv.delta();
  if (delta == 0.0) {
    DesignMatrix strict = optimal_strict(priv.epsilon());
    return make_result({strict}, Regime::kStrictDp, std::nullopt, pi, n);
  }

  const double corner = corner_retention(priv);
  const DesignMatrix symmetric(corner, corner);
  if (delta == 1.0) {
    // Both candidates collapse to direct questioning (1, 1).
    return make_result({symmetric}, Regime::kCornerInterior,
                       g_threshold(priv), pi, n);
  }

  const double g = g_threshold(priv);
  const double threshold = std::min(pi, 1.0 - pi);
  const DesignMatrix at_edge =
      pi <= 0.5 ? DesignMatrix(1.0, delta) : DesignMatrix(delta, 1.0);

  if (std::fabs(g - threshold) <= kTieTol) {
    return make_result({symmetric, at_edge}, Regime::kTie, g, pi, n);
  }
  if (g > threshold) {
    if (pi == 0.5) {
      // Both orientations of the edge mechanism are optimal by symmetry;
      // report the pair (their variances coincide at pi = 1/2).
      return make_result(
          {DesignMatrix(1.0, delta), DesignMatrix(delta, 1.0)}, Regime::kTie,
          g, pi, n);
    }
    return make_result({at_edge}, Regime::kCornerBoundary, g, pi, n);
  }
  return make_result({symmetric}, Regime::kCornerInterior, g, pi, n);
}

double optimal_warner(const PrivacyParams& priv) {
  if (priv.epsilon() == 0.0 && priv.delta() == 0.0) {
    throw ZeroEpsilonStrict(
        "the symmetric feasible interval (1/2, (e^epsilon + delta) / "
        "(e^epsilon + 1)] is empty at epsilon = delta = 0");
  }
  return corner_retention(priv);
}

BruteForceResult brute_force_optimal(const PrivacyParams& priv, double pi,
                                     std::int64_t n, std::int64_t grid) {
  if (grid < 100) {
    throw InvalidArgument("grid must be at least 100, got " +
                          std::to_string(grid));
  }
  if (!(pi >= 0.0 && pi <= 1.0)) {
    throw InvalidArgument("pi must lie in [0, 1]");
  }
  if (n < 1) {
    throw InvalidArgument("n must be at least 1");
  }

  bool found = false;
  double best_variance = std::numeric_limits<double>::infinity();
  double best_p00 = 0.0;
  double best_p11 = 0.0;
  const double scale = static_cast<double>(n);

  const auto consider = [&](double p00, double p11) {
    if (!in_region_r_prime(p00, p11, priv)) {
      return;
    }
    const double signal = p00 + p11 - 1.0;
    const double centered = p00 - 0.5 - pi * signal;
    const double variance =
        (0.25 - centered * centered) / (signal * signal * scale);
    if (!found || variance < best_variance ||
        (variance == best_variance &&
         (p00 < best_p00 || (p00 == best_p00 && p11 < best_p11)))) {
      found = true;
      best_variance = variance;
      best_p00 = p00;
      best_p11 = p11;
    }
  };

  const double step = 0.5 / static_cast<double>(grid - 1);
  for (std::int64_t i = 0; i < grid; ++i) {
    const double p00 = 0.5 + static_cast<double>(i) * step;
    for (std::int64_t j = 0; j < grid; ++j) {
      consider(p00, 0.5 + static_cast<double>(j) * step);
    }
  }

  // The exact boundary candidates: quantisation alone could miss the true
  // corner of the feasible region.
  const double candidates[] = {t_zero(priv), 1.0};
  for (const double t : candidates) {
    for (const Branch branch : {Branch::kDp1Tight, Branch::kDp2Tight}) {
      const BoundaryPoint point = boundary_point(t, priv, branch);
      consider(std::min(point.p00, 1.0), std::min(point.p11, 1.0));
    }
  }

  if (!found) {
    throw EmptyFeasibleRegion(
        "no lattice or boundary candidate satisfies the privacy "
        "constraints");
  }
  return BruteForceResult{DesignMatrix(best_p00, best_p11), best_variance};
}

std::vector<ContourRow> contour_sweep(double eps_min, double eps_max,
                                      double delta_min, double delta_max,
                                      std::int64_t resolution) {
  if (resolution < 2) {
    throw InvalidArgument("resolution must be at least 2, got " +
                          std::to_string(resolution));
  }
  if (!(eps_min <= eps_max) || !(delta_min <= delta_max)) {
    throw InvalidArgument("ranges must be non-empty and ordered");
  }
  if (eps_min < 0.0 || delta_min < 0.0 || delta_max > 1.0) {
    throw InvalidArgument("epsilon range must be non-negative and delta "
                          "range must lie within [0, 1]");
  }

  // A zero-width axis contributes a single coordinate, so a point query
  // emits exactly one row.
  const std::int64_t eps_points = eps_min == eps_max ? 1 : resolution;
  const std::int64_t delta_points = delta_min == delta_max ? 1 : resolution;
  const double eps_step =
      eps_points > 1 ? (eps_max - eps_min) / static_cast<double>(eps_points - 1)
                     : 0.0;
  const double delta_step =
      delta_points > 1
          ? (delta_max - delta_min) / static_cast<double>(delta_points - 1)
          : 0.0;

  std::vector<ContourRow> rows;
  rows.reserve(static_cast<std::size_t>(eps_points * delta_points));
  for (std::int64_t i = 0; i < eps_points; ++i) {
    const double epsilon = eps_min + static_cast<double>(i) * eps_step;
    for (std::int64_t j = 0; j < delta_points; ++j) {
      const double delta = delta_min + static_cast<double>(j) * delta_step;
      const PrivacyParams priv(epsilon, delta);
      const double denom = priv.exp_epsilon() + 2.0 * delta - 1.0;
      if (std::fabs(denom) <= kSingularBand) {
        rows.push_back(ContourRow{
            epsilon, delta, std::numeric_limits<double>::quiet_NaN(), true});
      } else {
        rows.push_back(ContourRow{epsilon, delta, g_threshold(priv), false});
      }
    }
  }
  return rows;
}

}  // namespace rropt
