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

#include "qcf/observer_frames.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qcf/errors.hpp"
#include "qcf/tolerances.hpp"
#include "number_format.hpp"

namespace qcf {

namespace {

// Tr[a b] without forming the product matrix.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw DimensionError("trace_product: incompatible shapes " + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                         "x" + std::to_string(b.cols()));
  }
  Complex acc{0.0, 0.0};
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      acc += a(r, c) * b(c, r);
    }
  }
  return acc;
}

double clamp_probability(double p, const char* where) {
  if (!(p >= -tol::kProbClamp) || !(p <= 1.0 + tol::kProbClamp)) {
    throw InternalInvariantError(std::string(where) + ": probability " + detail::num(p) +
                                 " outside [0,1] beyond numerical clamping range");
  }
  if (p < 0.0) return 0.0;
  if (p > 1.0) return 1.0;
  return p;
}

void require_full_rank(const DensityMatrix& rho, const char* where) {
  if (!rho.is_full_rank()) {
    throw RankError(std::string(where) + ": state is not full rank (min eigenvalue " +
                    detail::num(rho.min_eigenvalue()) +
                    "); decompose a full-rank state and condition on its outcomes instead");
  }
}

void require_scenario_frame_inputs(const Scenario& scenario, const char* where) {
  require_full_rank(scenario.rho, where);
  if (scenario.povm_a.dim() != scenario.rho.dim() ||
      scenario.channel.dim_in() != scenario.rho.dim() ||
      scenario.povm_b.dim() != scenario.channel.dim_out()) {
    throw DimensionError(std::string(where) + ": scenario dimensions are inconsistent");
  }
}

JointDistribution make_distribution(CausalFrame frame, const Scenario& scenario,
                                    std::vector<double> probs, const char* where) {
  for (double& p : probs) {
    p = clamp_probability(p, where);
  }
  return JointDistribution(frame, scenario.povm_a.n_outcomes(), scenario.povm_b.n_outcomes(),
                           std::move(probs), scenario.povm_a.labels(),
                           scenario.povm_b.labels());
}

}  // namespace

JointDistribution::JointDistribution(CausalFrame frame, std::size_t n_a, std::size_t n_b,
                                     std::vector<double> probs,
                                     std::vector<std::string> labels_a,
                                     std::vector<std::string> labels_b)
    : frame_(frame),
      n_a_(n_a),
      n_b_(n_b),
      probs_(std::move(probs)),
      labels_a_(std::move(labels_a)),
      labels_b_(std::move(labels_b)) {
  if (n_a_ == 0 || n_b_ == 0 || probs_.size() != n_a_ * n_b_) {
    throw DimensionError("JointDistribution: expected " + std::to_string(n_a_) + "x" +
                         std::to_string(n_b_) + " probabilities, got " +
                         std::to_string(probs_.size()));
  }
  if (labels_a_.size() != n_a_ || labels_b_.size() != n_b_) {
    throw DimensionError("JointDistribution: label counts do not match outcome counts");
  }
  double sum = 0.0;
  for (double& p : probs_) {
    p = clamp_probability(p, "JointDistribution");
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol::kNormalization) {
    throw InternalInvariantError("JointDistribution: total probability " +
                                 detail::num(sum) + " deviates from 1 beyond " +
                                 detail::num(tol::kNormalization));
  }
}

double JointDistribution::row_sum(std::size_t i) const {
  double acc = 0.0;
  for (std::size_t j = 0; j < n_b_; ++j) acc += probs_[i * n_b_ + j];
  return acc;
}

double JointDistribution::col_sum(std::size_t j) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < n_a_; ++i) acc += probs_[i * n_b_ + j];
  return acc;
}

double JointDistribution::total() const {
  double acc = 0.0;
  for (double p : probs_) acc += p;
  return acc;
}

Ensemble ensemble_decompose(const DensityMatrix& rho, const Povm& povm_a) {
  require_full_rank(rho, "ensemble_decompose");
  if (povm_a.dim() != rho.dim()) {
    throw DimensionError("ensemble_decompose: POVM dimension " +
                         std::to_string(povm_a.dim()) + " does not match state dimension " +
                         std::to_string(rho.dim()));
  }

  const ComplexMatrix sqrt_rho = psd_sqrt(rho.matrix());
  std::vector<double> weights;
  std::vector<DensityMatrix> members;
  std::vector<std::size_t> member_outcome;
  std::vector<std::size_t> degenerate;
  weights.reserve(povm_a.n_outcomes());

  for (std::size_t i = 0; i < povm_a.n_outcomes(); ++i) {
    // Weighing by Tr[sqrt(rho) a_i sqrt(rho)] = Tr[a_i rho] keeps each
    // member's trace at exactly the weight it is divided by.
    ComplexMatrix raw = sqrt_rho * povm_a.effect(i) * sqrt_rho;
    const double p = clamp_probability(trace(raw).real(), "ensemble_decompose");
    weights.push_back(p);
    if (p < tol::kZeroProb) {
      degenerate.push_back(i);
      continue;
    }
    members.push_back(validate_state(scale(raw, Complex{1.0 / p, 0.0})));
    member_outcome.push_back(i);
  }
  return Ensemble{std::move(weights), std::move(members), std::move(member_outcome),
                  std::move(degenerate), rho, povm_a};
}

DensityMatrix apply_channel(const KrausChannel& channel, const DensityMatrix& rho) {
  if (channel.dim_in() != rho.dim()) {
    throw DimensionError("apply_channel: channel input dimension " +
                         std::to_string(channel.dim_in()) +
                         " does not match state dimension " + std::to_string(rho.dim()));
  }
  ComplexMatrix out(channel.dim_out(), channel.dim_out());
  for (std::size_t m = 0; m < channel.n_kraus(); ++m) {
    const ComplexMatrix& k = channel.kraus_op(m);
    out = out + k * rho.matrix() * dagger(k);
  }
  return validate_state(out);
}

ComplexMatrix channel_pair_operator(const KrausChannel& channel) {
  const std::size_t d1 = channel.dim_in();
  const std::size_t d2 = channel.dim_out();
  ComplexMatrix pair(d1 * d2, d1 * d2);
  // sum_{m,ab,cd} K_{ab} conj(K_{dc}) |c>_1<b| x |a>_2<d|: row (c,a),
  // column (b,d) with system 1 as the slow index.
  for (std::size_t m = 0; m < channel.n_kraus(); ++m) {
    const ComplexMatrix& k = channel.kraus_op(m);
    for (std::size_t c = 0; c < d1; ++c) {
      for (std::size_t a = 0; a < d2; ++a) {
        const std::size_t row = c * d2 + a;
        for (std::size_t b = 0; b < d1; ++b) {
          for (std::size_t d = 0; d < d2; ++d) {
            pair(row, b * d2 + d) += k(a, b) * std::conj(k(d, c));
          }
        }
      }
    }
  }
  return pair;
}

LiftedOperator lifted_operator(const DensityMatrix& rho, const KrausChannel& channel) {
  require_full_rank(rho, "lifted_operator");
  if (channel.dim_in() != rho.dim()) {
    throw DimensionError("lifted_operator: channel input dimension " +
                         std::to_string(channel.dim_in()) +
                         " does not match state dimension " + std::to_string(rho.dim()));
  }
  const BipartiteDims dims{channel.dim_in(), channel.dim_out()};
  const ComplexMatrix sandwich = kron(psd_sqrt(rho.matrix()), ComplexMatrix::identity(dims.d2));
  LiftedOperator lifted{dims, sandwich * channel_pair_operator(channel) * sandwich};

  const ComplexMatrix reduced = partial_trace(lifted.mat, dims, Subsystem::One);
  const ApproxResult vs_output = approx_eq(reduced, apply_channel(channel, rho).matrix(),
                                           tol::kFrameEquality);
  if (!vs_output) {
    throw InternalInvariantError(
        "lifted_operator: system-1 partial trace deviates from the channel output by " +
        detail::num(vs_output.max_deviation));
  }
  return lifted;
}

DensityMatrix bipartite_state(const LiftedOperator& lifted) {
  try {
    return validate_state(partial_transpose(lifted.mat, lifted.dims, Subsystem::One));
  } catch (const Error& e) {
    throw InternalInvariantError(
        std::string("bipartite_state: partial transpose failed state validation (") +
        e.what() + ")");
  }
}

ComplexMatrix phi_state(const DensityMatrix& rho) {
  const std::size_t d = rho.dim();
  const ComplexMatrix sqrt_rho = psd_sqrt(rho.matrix());
  // (sqrt(rho)^T x I) sum_j |j>|j>: component (k, l) is sqrt(rho)^T_{kl},
  // flattened with the first factor slow.
  ComplexMatrix phi(d * d, 1);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = 0; l < d; ++l) {
      phi(k * d + l, 0) = sqrt_rho(l, k);
    }
  }
  const double norm = frobenius_norm(phi);
  if (std::abs(norm - 1.0) > tol::kNormalization) {
    throw InternalInvariantError("phi_state: norm " + detail::num(norm) +
                                 " deviates from 1");
  }
  return phi;
}

ChoiCheck choi_identity_check(const DensityMatrix& rho, const KrausChannel& channel,
                              double tol) {
  require_full_rank(rho, "choi_identity_check");
  const std::size_t d1 = channel.dim_in();
  if (d1 != rho.dim()) {
    throw DimensionError("choi_identity_check: channel input dimension " +
                         std::to_string(d1) + " does not match state dimension " +
                         std::to_string(rho.dim()));
  }

  // Left side: act with I_1 x K^m on the projector onto the deformed
  // entangled vector. Right side: partial transpose of the lifted operator.
  // The two sides share no intermediate beyond sqrt(rho).
  const ComplexMatrix phi = phi_state(rho);
  const ComplexMatrix projector = phi * dagger(phi);
  const ComplexMatrix eye1 = ComplexMatrix::identity(d1);
  ComplexMatrix lhs(d1 * channel.dim_out(), d1 * channel.dim_out());
  for (std::size_t m = 0; m < channel.n_kraus(); ++m) {
    const ComplexMatrix extended = kron(eye1, channel.kraus_op(m));
    lhs = lhs + extended * projector * dagger(extended);
  }

  const ComplexMatrix rhs = bipartite_state(lifted_operator(rho, channel)).matrix();
  const ApproxResult cmp = approx_eq(lhs, rhs, tol);
  return ChoiCheck{cmp.equal, cmp.max_deviation};
}

JointDistribution prob_alpha(const Scenario& scenario) {
  return prob_alpha(scenario, lifted_operator(scenario.rho, scenario.channel));
}

JointDistribution prob_alpha(const Scenario& scenario, const LiftedOperator& lifted) {
  require_scenario_frame_inputs(scenario, "prob_alpha");
  const std::size_t n_a = scenario.povm_a.n_outcomes();
  const std::size_t n_b = scenario.povm_b.n_outcomes();
  const ComplexMatrix eye2 = ComplexMatrix::identity(lifted.dims.d2);

  std::vector<double> probs(n_a * n_b, 0.0);
  for (std::size_t i = 0; i < n_a; ++i) {
    const ComplexMatrix conditioned =
        partial_trace(lifted.mat * kron(scenario.povm_a.effect(i), eye2), lifted.dims,
                      Subsystem::One);
    for (std::size_t j = 0; j < n_b; ++j) {
      probs[i * n_b + j] = trace_product(scenario.povm_b.effect(j), conditioned).real();
    }
  }
  return make_distribution(CausalFrame::AlphaForward, scenario, std::move(probs),
                           "prob_alpha");
}

JointDistribution prob_beta(const Scenario& scenario) {
  return prob_beta(scenario, lifted_operator(scenario.rho, scenario.channel));
}

JointDistribution prob_beta(const Scenario& scenario, const LiftedOperator& lifted) {
  require_scenario_frame_inputs(scenario, "prob_beta");
  const std::size_t n_a = scenario.povm_a.n_outcomes();
  const std::size_t n_b = scenario.povm_b.n_outcomes();
  const ComplexMatrix flipped = transpose(lifted.mat);
  const ComplexMatrix eye1 = ComplexMatrix::identity(lifted.dims.d1);

  std::vector<double> probs(n_a * n_b, 0.0);
  for (std::size_t j = 0; j < n_b; ++j) {
    const ComplexMatrix conditioned =
        partial_trace(flipped * kron(eye1, transpose(scenario.povm_b.effect(j))),
                      lifted.dims, Subsystem::Two);
    for (std::size_t i = 0; i < n_a; ++i) {
      probs[i * n_b + j] =
          trace_product(transpose(scenario.povm_a.effect(i)), conditioned).real();
    }
  }
  return make_distribution(CausalFrame::BetaReverse, scenario, std::move(probs),
                           "prob_beta");
}

JointDistribution prob_gamma(const Scenario& scenario) {
  return prob_gamma(scenario, lifted_operator(scenario.rho, scenario.channel));
}

JointDistribution prob_gamma(const Scenario& scenario, const LiftedOperator& lifted) {
  require_scenario_frame_inputs(scenario, "prob_gamma");
  const std::size_t n_a = scenario.povm_a.n_outcomes();
  const std::size_t n_b = scenario.povm_b.n_outcomes();
  const ComplexMatrix tau = partial_transpose(lifted.mat, lifted.dims, Subsystem::One);

  std::vector<double> probs(n_a * n_b, 0.0);
  for (std::size_t i = 0; i < n_a; ++i) {
    const ComplexMatrix a_t = transpose(scenario.povm_a.effect(i));
    for (std::size_t j = 0; j < n_b; ++j) {
      probs[i * n_b + j] =
          trace_product(kron(a_t, scenario.povm_b.effect(j)), tau).real();
    }
  }
  return make_distribution(CausalFrame::GammaSpacelike, scenario, std::move(probs),
                           "prob_gamma");
}

std::vector<double> conditional_distribution(const JointDistribution& joint,
                                             std::size_t fixed_a_index) {
  if (fixed_a_index >= joint.n_a()) {
    throw DimensionError("conditional_distribution: outcome index " +
                         std::to_string(fixed_a_index) + " out of range for " +
                         std::to_string(joint.n_a()) + " outcomes");
  }
  const double marginal = joint.row_sum(fixed_a_index);
  if (!(marginal > tol::kZeroProb)) {
    throw ZeroMarginalError("conditional_distribution: outcome " +
                            std::to_string(fixed_a_index) + " has marginal " +
                            detail::num(marginal) +
                            " below the zero threshold; conditioning is undefined");
  }
  std::vector<double> conditional(joint.n_b(), 0.0);
  for (std::size_t j = 0; j < joint.n_b(); ++j) {
    conditional[j] = joint(fixed_a_index, j) / marginal;
  }
  return conditional;
}

}  // namespace qcf
