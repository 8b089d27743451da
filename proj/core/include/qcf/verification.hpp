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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcf/conditional_states.hpp"
#include "qcf/observer_frames.hpp"
#include "qcf/quantum_objects.hpp"
#include "qcf/tolerances.hpp"

namespace qcf {

/// Per-check tolerances. The frame bound is looser than the identity checks
/// because three independent O(d^3) pipelines feed it; 1e-10 leaves two
/// orders of magnitude of headroom over observed double-precision error at
/// the supported dimensions.
struct FrameTolerances {
  double frame = tol::kFrameEquality;
  double choi = tol::kChoiIdentity;
  double star = tol::kStarEquality;
};

/// Everything one scenario yields: the three frames' distributions computed
/// through their separate pipelines, all pairwise gaps, and the two
/// structural identity checks. pass is true iff every deviation is within
/// its tolerance.
struct FrameReport {
  std::string scenario_name;
  JointDistribution alpha;
  JointDistribution beta;
  JointDistribution gamma;
  double dev_alpha_beta = 0.0;
  double dev_alpha_gamma = 0.0;
  double dev_beta_gamma = 0.0;
  double choi_deviation = 0.0;
  double star_acausal_deviation = 0.0;
  double star_causal_deviation = 0.0;
  FrameTolerances tolerances;
  bool pass = false;
  double wall_seconds = 0.0;
};

/// Marginal distributions of B's outcomes under the two alternative A
/// measurements, against the analytic marginal Tr[b_j T(rho)].
/// max_deviation covers all three pairwise comparisons.
struct NoSignallingReport {
  std::string scenario_name;
  std::vector<double> marginal_under_a;
  std::vector<double> marginal_under_alt;
  std::vector<double> analytic_marginal;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Random-scenario sweep configuration. A trial draws its dimensions, Kraus
/// count, and outcome counts uniformly from these lists (combinations that
/// cannot form a trace-preserving channel are excluded). Deterministic:
/// the same config and base_seed reproduce the identical report.
struct BatchConfig {
  std::vector<std::size_t> d1_choices{2, 3, 4};
  std::vector<std::size_t> d2_choices{2, 3, 4};
  std::vector<std::size_t> kraus_choices{1, 2, 4};
  std::vector<std::size_t> outcome_choices{2, 3};
  std::size_t n_trials = 100;
  std::uint64_t base_seed = 0;
  FrameTolerances tolerances;
};

/// One recorded anomaly in a batch: a trial whose checks exceeded tolerance,
/// or one whose scenario generation/validation threw.
struct TrialAnomaly {
  std::size_t trial_index = 0;
  std::uint64_t seed = 0;
  std::string message;
};

/// Batch aggregate. The worst trial's seed feeds run_trial for an exact
/// replay of its deviation.
struct BatchReport {
  std::size_t n_trials = 0;
  std::size_t n_pass = 0;
  std::size_t n_fail = 0;
  std::size_t n_error = 0;
  double worst_frame_deviation = 0.0;
  double worst_choi_deviation = 0.0;
  double worst_star_deviation = 0.0;
  std::uint64_t worst_seed = 0;
  std::size_t worst_trial_index = 0;
  double total_seconds = 0.0;
  std::vector<TrialAnomaly> failures;
  std::vector<TrialAnomaly> errors;
};

/// Largest entrywise gap between two equally shaped distributions.
double max_probability_deviation(const JointDistribution& a, const JointDistribution& b);

/// Runs the full battery on one scenario: the three probability pipelines
/// (sharing only the lifted-operator construction), their pairwise gaps,
/// the two-sided channel-state identity, and both star-product equalities.
FrameReport verify_frame_equality(const Scenario& scenario, const FrameTolerances& tols = {});

/// Compares B's marginals under the scenario's two A measurements (requires
/// povm_a_alt; throws MissingAltPovmError otherwise) and against the
/// analytic marginal computed directly from the channel output state.
NoSignallingReport verify_no_signalling(const Scenario& scenario,
                                        double tolerance = tol::kNoSignalling);

/// Deterministically regenerates the random scenario a trial seed denotes.
Scenario scenario_from_seed(const BatchConfig& config, std::uint64_t seed);

/// Regenerates and re-verifies one trial from its seed.
FrameReport run_trial(const BatchConfig& config, std::uint64_t seed);

/// Runs n_trials independent random scenarios; per-trial errors are counted
/// and recorded, never fatal. Trial seeds derive from base_seed by index.
BatchReport batch_verify(const BatchConfig& config);

}  // namespace qcf
