// Copyright 2026 The qcf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcf/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <utility>

#include "qcf/errors.hpp"
#include "qcf/random_objects.hpp"
#include "number_format.hpp"

namespace qcf {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_choices(const std::vector<std::size_t>& choices, const char* what) {
  if (choices.empty()) {
    throw DimensionError(std::string("batch config: ") + what + " choice list is empty");
  }
}

}  // namespace

double max_probability_deviation(const JointDistribution& a, const JointDistribution& b) {
  if (a.n_a() != b.n_a() || a.n_b() != b.n_b()) {
    throw DimensionError("max_probability_deviation: distributions are " +
                         std::to_string(a.n_a()) + "x" + std::to_string(a.n_b()) + " and " +
                         std::to_string(b.n_a()) + "x" + std::to_string(b.n_b()));
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < a.probs().size(); ++k) {
    worst = std::max(worst, std::abs(a.probs()[k] - b.probs()[k]));
  }
  return worst;
}

FrameReport verify_frame_equality(const Scenario& scenario, const FrameTolerances& tols) {
  const Clock::time_point start = Clock::now();
  validate_scenario(scenario);

  const LiftedOperator lifted = lifted_operator(scenario.rho, scenario.channel);
  JointDistribution alpha = prob_alpha(scenario, lifted);
  JointDistribution beta = prob_beta(scenario, lifted);
  JointDistribution gamma = prob_gamma(scenario, lifted);

  const double dev_ab = max_probability_deviation(alpha, beta);
  const double dev_ag = max_probability_deviation(alpha, gamma);
  const double dev_bg = max_probability_deviation(beta, gamma);
  const ChoiCheck choi = choi_identity_check(scenario.rho, scenario.channel, tols.choi);
  const StarEqualityReport star =
      verify_star_equalities(scenario.rho, scenario.channel, tols.star);

  const bool pass = dev_ab <= tols.frame && dev_ag <= tols.frame && dev_bg <= tols.frame &&
                    choi.ok && star.pass;
  return FrameReport{scenario.name,
                     std::move(alpha),
                     std::move(beta),
                     std::move(gamma),
                     dev_ab,
                     dev_ag,
                     dev_bg,
                     choi.deviation,
                     star.acausal_deviation,
                     star.causal_deviation,
                     tols,
                     pass,
                     seconds_since(start)};
}

NoSignallingReport verify_no_signalling(const Scenario& scenario, double tolerance) {
  validate_scenario(scenario);
  if (!scenario.povm_a_alt.has_value()) {
    throw MissingAltPovmError("verify_no_signalling: scenario \"" + scenario.name +
                              "\" carries no alternative measurement for device A");
  }

  const LiftedOperator lifted = lifted_operator(scenario.rho, scenario.channel);
  const JointDistribution under_a = prob_gamma(scenario, lifted);

  Scenario swapped = scenario;
  swapped.povm_a = *scenario.povm_a_alt;
  const JointDistribution under_alt = prob_gamma(swapped, lifted);

  const DensityMatrix evolved = apply_channel(scenario.channel, scenario.rho);
  const std::size_t n_b = scenario.povm_b.n_outcomes();

  NoSignallingReport report;
  report.scenario_name = scenario.name;
  report.tolerance = tolerance;
  report.marginal_under_a.resize(n_b);
  report.marginal_under_alt.resize(n_b);
  report.analytic_marginal.resize(n_b);
  for (std::size_t j = 0; j < n_b; ++j) {
    const ComplexMatrix product = scenario.povm_b.effect(j) * evolved.matrix();
    report.analytic_marginal[j] = trace(product).real();
    report.marginal_under_a[j] = under_a.col_sum(j);
    report.marginal_under_alt[j] = under_alt.col_sum(j);
    const double gap = std::max({std::abs(report.marginal_under_a[j] - report.analytic_marginal[j]),
                                 std::abs(report.marginal_under_alt[j] - report.analytic_marginal[j]),
                                 std::abs(report.marginal_under_a[j] - report.marginal_under_alt[j])});
    report.max_deviation = std::max(report.max_deviation, gap);
  }
  report.pass = report.max_deviation <= tolerance;
  return report;
}

Scenario scenario_from_seed(const BatchConfig& config, std::uint64_t seed) {
  require_choices(config.d1_choices, "d1");
  require_choices(config.d2_choices, "d2");
  require_choices(config.kraus_choices, "kraus");
  require_choices(config.outcome_choices, "outcome");

  // Draw order is part of the reproducibility contract; do not reorder.
  Prng picker(derive_seed(seed, 0));
  const std::size_t d1 = config.d1_choices[picker.index(config.d1_choices.size())];
  const std::size_t d2 = config.d2_choices[picker.index(config.d2_choices.size())];

  // Keep only Kraus counts that admit an isometric dilation for (d1, d2).
  std::vector<std::size_t> feasible;
  for (std::size_t k : config.kraus_choices) {
    if (k > 0 && k * d2 >= d1) feasible.push_back(k);
  }
  if (feasible.empty()) {
    throw DimensionError("scenario_from_seed: no configured Kraus count supports d1=" +
                         std::to_string(d1) + ", d2=" + std::to_string(d2));
  }
  const std::size_t n_kraus = feasible[picker.index(feasible.size())];
  const std::size_t n_a = config.outcome_choices[picker.index(config.outcome_choices.size())];
  const std::size_t n_b = config.outcome_choices[picker.index(config.outcome_choices.size())];

  DensityMatrix rho = random_state(d1, derive_seed(seed, 1), /*ensure_full_rank=*/true);
  KrausChannel channel = random_channel(d1, d2, n_kraus, derive_seed(seed, 2));
  Povm povm_a = random_povm(d1, n_a, derive_seed(seed, 3), "a");
  Povm povm_b = random_povm(d2, n_b, derive_seed(seed, 4), "b");
  Povm povm_alt = random_povm(d1, n_a, derive_seed(seed, 5), "a'");

  return Scenario{"random-" + std::to_string(seed),
                  BipartiteDims{d1, d2},
                  std::move(rho),
                  std::move(channel),
                  std::move(povm_a),
                  std::move(povm_b),
                  std::move(povm_alt),
                  /*pure_fallback=*/false};
}

FrameReport run_trial(const BatchConfig& config, std::uint64_t seed) {
  return verify_frame_equality(scenario_from_seed(config, seed), config.tolerances);
}

BatchReport batch_verify(const BatchConfig& config) {
  if (config.n_trials == 0) {
    throw DimensionError("batch_verify: n_trials must be at least 1");
  }

  const Clock::time_point start = Clock::now();
  BatchReport report;
  report.n_trials = config.n_trials;

  for (std::size_t trial = 0; trial < config.n_trials; ++trial) {
    const std::uint64_t seed = derive_seed(config.base_seed, trial);
    try {
      const FrameReport frame = run_trial(config, seed);
      const double frame_dev =
          std::max({frame.dev_alpha_beta, frame.dev_alpha_gamma, frame.dev_beta_gamma});
      if (frame_dev > report.worst_frame_deviation) {
        report.worst_frame_deviation = frame_dev;
        report.worst_seed = seed;
        report.worst_trial_index = trial;
      }
      report.worst_choi_deviation = std::max(report.worst_choi_deviation, frame.choi_deviation);
      report.worst_star_deviation =
          std::max({report.worst_star_deviation, frame.star_acausal_deviation,
                    frame.star_causal_deviation});
      if (frame.pass) {
        ++report.n_pass;
      } else {
        ++report.n_fail;
        report.failures.push_back(TrialAnomaly{
            trial, seed,
            "frame deviation " + detail::num(frame_dev) + ", channel-state deviation " +
                detail::num(frame.choi_deviation)});
      }
    } catch (const Error& e) {
      ++report.n_error;
      report.errors.push_back(TrialAnomaly{trial, seed, e.what()});
    }
  }
  report.total_seconds = seconds_since(start);
  return report;
}

}  // namespace qcf
