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
// Command-line front end: mechanism design, verification, estimation,
// simulation and contour export with machine-readable output.

#include <algorithm>
#include <clocale>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rropt/estimator.hpp"
#include "rropt/mechanism.hpp"
#include "rropt/optimizer.hpp"
#include "rropt/simulation.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitIoFailure = 3;
constexpr int kSchemaVersion = 1;

// Output file could not be opened or written.
class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json mechanism_json(const rropt::DesignMatrix& p) {
  return json{{"p00", p.p00()}, {"p11", p.p11()}};
}

void emit(const std::string& command, json inputs, json result) {
  const json envelope{{"schema_version", kSchemaVersion},
                      {"command", command},
                      {"inputs", std::move(inputs)},
                      {"result", std::move(result)}};
  std::cout << envelope.dump(2) << "\n";
}

struct OptimalArgs {
  double epsilon = 0.0;
  double delta = 0.0;
  double pi = 0.0;
  std::int64_t n = 1;
  bool warner = false;
};

void run_optimal(const OptimalArgs& args) {
  const json inputs{{"epsilon", args.epsilon},
                    {"delta", args.delta},
                    {"pi", args.pi},
                    {"n", args.n},
                    {"warner", args.warner}};
  const rropt::PrivacyParams priv(args.epsilon, args.delta);
  if (args.warner) {
    const double pw = rropt::optimal_warner(priv);
    emit("optimal", inputs,
         json{{"regime", rropt::regime_name(rropt::Regime::kWarnerDiagonal)},
              {"pw", pw},
              {"mechanisms", json::array({mechanism_json(
                                 rropt::DesignMatrix(pw, pw))})},
              {"variance_at_pi",
               rropt::warner_variance(pw, args.pi, args.n)}});
    return;
  }
  const rropt::OptimalResult result =
      rropt::optimal_relaxed(priv, args.pi, args.n);
  json mechanisms = json::array();
  for (const rropt::DesignMatrix& mechanism : result.mechanisms) {
    mechanisms.push_back(mechanism_json(mechanism));
  }
  emit("optimal", inputs,
       json{{"regime", rropt::regime_name(result.regime)},
            {"g", result.g_value ? json(*result.g_value) : json(nullptr)},
            {"mechanisms", std::move(mechanisms)},
            {"variance_at_pi", result.variance_at_pi}});
}

struct VerifyArgs {
  double p00 = 0.0;
  double p11 = 0.0;
  double epsilon = 0.0;
  double delta = 0.0;
  double tol = rropt::kFeasibilityTol;
};

void run_verify(const VerifyArgs& args) {
  const json inputs{{"p00", args.p00},
                    {"p11", args.p11},
                    {"epsilon", args.epsilon},
                    {"delta", args.delta},
                    {"tol", args.tol}};
  const rropt::DesignMatrix p(args.p00, args.p11);
  const rropt::PrivacyParams priv(args.epsilon, args.delta);
  const double e = priv.exp_epsilon();
  const double d = priv.delta();
  // Slack of each inequality: non-negative means satisfied.
  const double slack_dp1 = e * (1.0 - p.p00()) + d - p.p11();
  const double slack_dp2 = e * (1.0 - p.p11()) + d - p.p00();
  const double slack_dp3 = e * p.p11() + d - (1.0 - p.p00());
  const double slack_dp4 = e * p.p00() + d - (1.0 - p.p11());
  const bool in_r_prime = rropt::in_region_r_prime(p, priv, args.tol);
  const bool on_boundary =
      in_r_prime && std::min(slack_dp1, slack_dp2) <= args.tol;
  emit("verify", inputs,
       json{{"slacks",
             json{{"dp1", slack_dp1},
                  {"dp2", slack_dp2},
                  {"dp3", slack_dp3},
                  {"dp4", slack_dp4}}},
            {"satisfies_dp", rropt::satisfies_dp(p, priv, args.tol)},
            {"in_r_prime", in_r_prime},
            {"on_r_double_prime", on_boundary}});
}

struct EstimateArgs {
  double p00 = 0.0;
  double p11 = 0.0;
  std::int64_t n = 0;
  std::int64_t count_ones = 0;
  std::optional<double> reference_pi;
};

void run_estimate(const EstimateArgs& args) {
  json inputs{{"p00", args.p00},
              {"p11", args.p11},
              {"n", args.n},
              {"count_ones", args.count_ones}};
  inputs["reference_pi"] =
      args.reference_pi ? json(*args.reference_pi) : json(nullptr);
  const rropt::DesignMatrix p(args.p00, args.p11);
  const rropt::SurveyOutcome outcome(args.n, args.count_ones);
  const rropt::EstimateReport report =
      rropt::build_report(p, outcome, args.reference_pi);
  emit("estimate", inputs,
       json{{"pi_hat_raw", report.pi_hat_raw},
            {"pi_hat_clamped", report.pi_hat_clamped},
            {"variance", report.variance},
            {"moe_chebyshev", report.moe_chebyshev},
            {"moe_normal", report.moe_normal}});
}

struct SimulateArgs {
  double p00 = 0.0;
  double p11 = 0.0;
  double pi = 0.0;
  std::int64_t n = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
};

void run_simulate(const SimulateArgs& args) {
  const json inputs{{"p00", args.p00},   {"p11", args.p11},
                    {"pi", args.pi},     {"n", args.n},
                    {"trials", args.trials}, {"seed", args.seed}};
  const rropt::DesignMatrix p(args.p00, args.p11);
  const rropt::SimulationConfig cfg{args.pi, args.n, args.trials, args.seed};
  const rropt::MonteCarloReport report = rropt::monte_carlo(p, cfg);
  emit("simulate", inputs,
       json{{"mean_estimate", report.mean_estimate},
            {"empirical_variance", report.empirical_variance},
            {"theoretical_variance", report.theoretical_variance},
            {"z_score_bias", report.z_score_bias},
            {"trials", report.trials}});
}

struct ContourArgs {
  double eps_min = 0.01;
  double eps_max = 3.0;
  double delta_min = 0.0;
  double delta_max = 0.5;
  std::int64_t resolution = 200;
  std::string out_path;
};

std::string format_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void run_contour(const ContourArgs& args) {
  const json inputs{{"eps_min", args.eps_min},
                    {"eps_max", args.eps_max},
                    {"delta_min", args.delta_min},
                    {"delta_max", args.delta_max},
                    {"resolution", args.resolution},
                    {"out", args.out_path}};
  const std::vector<rropt::ContourRow> rows = rropt::contour_sweep(
      args.eps_min, args.eps_max, args.delta_min, args.delta_max,
      args.resolution);

  std::ofstream out(args.out_path, std::ios::binary);
  if (!out) {
    throw IoFailure("cannot open output file: " + args.out_path);
  }
  out << "epsilon,delta,g\n";
  std::int64_t singular = 0;
  for (const rropt::ContourRow& row : rows) {
    out << format_number(row.epsilon) << ',' << format_number(row.delta)
        << ',';
    if (row.singular) {
      out << "nan";
      ++singular;
    } else {
      out << format_number(row.g);
    }
    out << '\n';
  }
  out.flush();
  if (!out) {
    throw IoFailure("failed writing output file: " + args.out_path);
  }
  emit("contour", inputs,
       json{{"rows", static_cast<std::int64_t>(rows.size())},
            {"singular_rows", singular},
            {"path", args.out_path}});
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_NUMERIC, "C");
  CLI::App app{
      "Design, verify and evaluate differentially private binary "
      "randomised-response mechanisms"};
  app.require_subcommand(1);

  OptimalArgs optimal_args;
  CLI::App* optimal = app.add_subcommand(
      "optimal", "Variance-optimal mechanism for a privacy budget");
  optimal->add_option("--epsilon", optimal_args.epsilon)->required();
  optimal->add_option("--delta", optimal_args.delta)->required();
  optimal->add_option("--pi", optimal_args.pi)->required();
  optimal->add_option("--n", optimal_args.n)->default_val(1);
  optimal->add_flag("--warner", optimal_args.warner,
                    "Restrict to the symmetric (Warner) family");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check a design matrix against a privacy budget");
  verify->add_option("--p00", verify_args.p00)->required();
  verify->add_option("--p11", verify_args.p11)->required();
  verify->add_option("--epsilon", verify_args.epsilon)->required();
  verify->add_option("--delta", verify_args.delta)->required();
  verify->add_option("--tol", verify_args.tol)->default_val(
      rropt::kFeasibilityTol);

  EstimateArgs estimate_args;
  double reference_pi_flag = -1.0;
  CLI::App* estimate = app.add_subcommand(
      "estimate", "Estimate the population proportion from a tally");
  estimate->add_option("--p00", estimate_args.p00)->required();
  estimate->add_option("--p11", estimate_args.p11)->required();
  estimate->add_option("--n", estimate_args.n)->required();
  estimate->add_option("--count-ones", estimate_args.count_ones)->required();
  CLI::Option* reference_option =
      estimate->add_option("--reference-pi", reference_pi_flag,
                           "Evaluate the variance at this proportion instead "
                           "of the plug-in estimate");

  SimulateArgs simulate_args;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo validation of the estimator");
  simulate->add_option("--p00", simulate_args.p00)->required();
  simulate->add_option("--p11", simulate_args.p11)->required();
  simulate->add_option("--pi", simulate_args.pi)->required();
  simulate->add_option("--n", simulate_args.n)->required();
  simulate->add_option("--trials", simulate_args.trials)->required();
  simulate->add_option("--seed", simulate_args.seed)->required();

  ContourArgs contour_args;
  CLI::App* contour = app.add_subcommand(
      "contour", "Export the regime threshold over a budget lattice as CSV");
  contour->add_option("--eps-min", contour_args.eps_min)->default_val(0.01);
  contour->add_option("--eps-max", contour_args.eps_max)->default_val(3.0);
  contour->add_option("--delta-min", contour_args.delta_min)->default_val(0.0);
  contour->add_option("--delta-max", contour_args.delta_max)->default_val(0.5);
  contour->add_option("--resolution", contour_args.resolution)
      ->default_val(200);
  contour->add_option("--out", contour_args.out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return kExitBadInput;
  }

  try {
    if (*optimal) {
      run_optimal(optimal_args);
    } else if (*verify) {
      run_verify(verify_args);
    } else if (*estimate) {
      if (reference_option->count() > 0) {
        estimate_args.reference_pi = reference_pi_flag;
      }
      run_estimate(estimate_args);
    } else if (*simulate) {
      run_simulate(simulate_args);
    } else if (*contour) {
      run_contour(contour_args);
    }
  } catch (const IoFailure& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitIoFailure;
  } catch (const rropt::Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}
