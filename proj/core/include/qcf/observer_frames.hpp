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

#include <cstddef>
#include <string>
#include <vector>

#include "qcf/complex_matrix.hpp"
#include "qcf/quantum_objects.hpp"

namespace qcf {

/// Convex decomposition of a full-rank state induced by a POVM:
/// weights p_i = Tr[a_i rho], members sigma_i = sqrt(rho) a_i sqrt(rho) / p_i,
/// so that sum_i p_i sigma_i = rho. Outcomes with weight below the zero
/// threshold carry no member; their indices are listed in
/// degenerate_outcomes and `members`/`member_outcome` stay aligned.
struct Ensemble {
  std::vector<double> weights;                   // one entry per POVM outcome
  std::vector<DensityMatrix> members;            // retained sigma_i only
  std::vector<std::size_t> member_outcome;       // outcome index per member
  std::vector<std::size_t> degenerate_outcomes;  // outcomes with weight ~ 0
  DensityMatrix source_state;
  Povm source_povm;
};

/// The bipartite operator T_rho = (sqrt(rho) x I_2) [sum_m K^m x K^m_dag]
/// (sqrt(rho) x I_2) on system1 x system2, with system 1 as the slow
/// (left) tensor factor. Hermitian; its system-1 partial trace is the
/// channel output state, and its system-1 partial transpose is a valid
/// bipartite density matrix.
struct LiftedOperator {
  BipartiteDims dims;
  ComplexMatrix mat;
};

/// Joint outcome distribution p(a_i, b_j) of one scenario under one causal
/// frame. Entries are clamped into [0, 1] on construction; a raw value
/// outside [-1e-10, 1 + 1e-10] or a total away from 1 signals a pipeline
/// bug and throws InternalInvariantError.
class JointDistribution {
 public:
  JointDistribution(CausalFrame frame, std::size_t n_a, std::size_t n_b,
                    std::vector<double> probs, std::vector<std::string> labels_a,
                    std::vector<std::string> labels_b);

  CausalFrame frame() const { return frame_; }
  std::size_t n_a() const { return n_a_; }
  std::size_t n_b() const { return n_b_; }
  double operator()(std::size_t i, std::size_t j) const { return probs_[i * n_b_ + j]; }
  const std::vector<double>& probs() const { return probs_; }
  const std::vector<std::string>& labels_a() const { return labels_a_; }
  const std::vector<std::string>& labels_b() const { return labels_b_; }

  /// Marginal of outcome a_i: sum_j p(a_i, b_j).
  double row_sum(std::size_t i) const;
  /// Marginal of outcome b_j: sum_i p(a_i, b_j).
  double col_sum(std::size_t j) const;
  double total() const;

 private:
  CausalFrame frame_;
  std::size_t n_a_;
  std::size_t n_b_;
  std::vector<double> probs_;  // row-major, n_a x n_b
  std::vector<std::string> labels_a_;
  std::vector<std::string> labels_b_;
};

/// Verdict of the two-sided identity-map-tensor-channel consistency check;
/// deviation is the max absolute entrywise gap between the two sides.
struct ChoiCheck {
  bool ok = false;
  double deviation = 0.0;
};

/// Decomposes rho into the preparation ensemble selected by povm_a.
/// Throws RankError when rho is not full rank, DimensionError on mismatch.
Ensemble ensemble_decompose(const DensityMatrix& rho, const Povm& povm_a);

/// sum_m K^m rho K^m_dag, validated as a state.
DensityMatrix apply_channel(const KrausChannel& channel, const DensityMatrix& rho);

/// The pair-form operator sum_m K^m x K^m_dag of a channel, written on
/// system1 x system2 as sum_{m,ab,cd} K^m_{ab} conj(K^m_{dc})
/// |c>_1<b| x |a>_2<d|. For the identity channel this is SWAP; its
/// system-2 partial trace is I_1 for every trace-preserving channel.
ComplexMatrix channel_pair_operator(const KrausChannel& channel);

/// Builds T_rho and enforces that its system-1 partial trace equals the
/// channel output state. Throws RankError when rho is not full rank.
LiftedOperator lifted_operator(const DensityMatrix& rho, const KrausChannel& channel);

/// tau_12: the system-1 partial transpose of T_rho, validated as a bipartite
/// density matrix (failure here indicates an internal bug, reported as
/// InternalInvariantError).
DensityMatrix bipartite_state(const LiftedOperator& lifted);

/// The state-deformed maximally entangled column vector
/// (sqrt(rho)^T x I) sum_j |j>|j> of dimension d1^2; unit norm.
ComplexMatrix phi_state(const DensityMatrix& rho);

/// Checks that extending the Kraus operators as I_1 x K^m and applying them
/// to the projector onto phi_state(rho) reproduces bipartite_state(...),
/// building the two sides through independent code paths.
ChoiCheck choi_identity_check(const DensityMatrix& rho, const KrausChannel& channel,
                              double tol);

/// Frame where A's measurement precedes the channel:
/// p(a_i, b_j) = Tr_2[b_j Tr_1[T_rho (a_i x I_2)]].
JointDistribution prob_alpha(const Scenario& scenario);
JointDistribution prob_alpha(const Scenario& scenario, const LiftedOperator& lifted);

/// Frame with the arrow of influence reversed; every operator is transposed:
/// p(a_i, b_j) = Tr_1[a_i^T Tr_2[T_rho^T (I_1 x b_j^T)]].
JointDistribution prob_beta(const Scenario& scenario);
JointDistribution prob_beta(const Scenario& scenario, const LiftedOperator& lifted);

/// Frame treating the two outcomes as space-like:
/// p(a_i, b_j) = Tr[(a_i^T x b_j) tau_12].
JointDistribution prob_gamma(const Scenario& scenario);
JointDistribution prob_gamma(const Scenario& scenario, const LiftedOperator& lifted);

/// p(b_j | a_i) = p(a_i, b_j) / sum_j p(a_i, b_j). Throws ZeroMarginalError
/// when the conditioning outcome has marginal below the zero threshold.
std::vector<double> conditional_distribution(const JointDistribution& joint,
                                             std::size_t fixed_a_index);

}  // namespace qcf
