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

#include "qcf/complex_matrix.hpp"
#include "qcf/observer_frames.hpp"
#include "qcf/quantum_objects.hpp"

namespace qcf {

/// How a conditional state relates its two regions: Acausal for space-like
/// separated regions (a PSD bipartite state), Causal for an input-output
/// pair (the partial transpose of an acausal one; Hermitian but generally
/// not PSD).
enum class ConditionalKind { Acausal, Causal };

/// A channel re-expressed as an operator on region A x region B. Both kinds
/// have unit trace and reduce to I_A/d_A when B is traced out.
struct ConditionalState {
  BipartiteDims dims;  // d1 = channel input (A), d2 = channel output (B)
  ComplexMatrix mat;
  ConditionalKind kind;
};

/// Outcome of the two belief-propagation identities: propagating the
/// transposed prior through the acausal conditional must rebuild the
/// bipartite state tau_12, and propagating the prior itself through the
/// causal conditional must rebuild the lifted operator T_rho.
struct StarEqualityReport {
  double acausal_deviation = 0.0;  // vs bipartite_state(lifted_operator(...))
  double causal_deviation = 0.0;   // vs lifted_operator(...).mat
  double tolerance = 0.0;
  bool pass = false;
};

/// The channel applied to half of the normalized maximally entangled state:
/// sum_m (I_A x K^m) |Phi+><Phi+| (I_A x K^m)^dag with
/// |Phi+> = (1/sqrt(d_A)) sum_i |i>|i>. PSD, unit trace.
ConditionalState acausal_conditional(const KrausChannel& channel);

/// Partial transpose on region A of acausal_conditional(channel).
ConditionalState causal_conditional(const KrausChannel& channel);

/// Belief propagation of a prior through a conditional state:
/// d_A (sqrt(prior) x I_B) cond.mat (sqrt(prior) x I_B).
/// The prior must be PSD with unit trace on region A.
ComplexMatrix star_product(const ComplexMatrix& prior, const ConditionalState& cond);

/// Checks star_product(rho^T, acausal) against tau_12 and
/// star_product(rho, causal) against T_rho, each built independently.
/// The acausal prior is rho^T because tracing region B out of tau_12
/// leaves rho^T.
StarEqualityReport verify_star_equalities(const DensityMatrix& rho,
                                          const KrausChannel& channel, double tol);

}  // namespace qcf
