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

#include "qcf/conditional_states.hpp"

#include <cmath>
#include <string>

#include "qcf/errors.hpp"
#include "qcf/tolerances.hpp"
#include "number_format.hpp"

namespace qcf {

namespace {

// Tr_B of a region-A x region-B operator must be I_A/d_A; both conditional
// kinds inherit this from channel trace preservation.
void require_uniform_reduction(const ComplexMatrix& mat, const BipartiteDims& dims,
                               const char* where) {
  const ComplexMatrix reduced = partial_trace(mat, dims, Subsystem::Two);
  ComplexMatrix uniform = ComplexMatrix::identity(dims.d1);
  uniform = scale(uniform, Complex{1.0 / static_cast<double>(dims.d1), 0.0});
  const ApproxResult cmp = approx_eq(reduced, uniform, tol::kFrameEquality);
  if (!cmp) {
    throw InternalInvariantError(
        std::string(where) + ": reduction onto region A deviates from I/d_A by " +
        detail::num(cmp.max_deviation));
  }
}

}  // namespace

ConditionalState acausal_conditional(const KrausChannel& channel) {
  const std::size_t da = channel.dim_in();
  const std::size_t db = channel.dim_out();
  const BipartiteDims dims{da, db};

  ComplexMatrix phi_plus(da * da, 1);
  const Complex amp{1.0 / std::sqrt(static_cast<double>(da)), 0.0};
  for (std::size_t i = 0; i < da; ++i) {
    phi_plus(i * da + i, 0) = amp;
  }
  const ComplexMatrix projector = phi_plus * dagger(phi_plus);

  const ComplexMatrix eye_a = ComplexMatrix::identity(da);
  ComplexMatrix mat(da * db, da * db);
  for (std::size_t m = 0; m < channel.n_kraus(); ++m) {
    const ComplexMatrix extended = kron(eye_a, channel.kraus_op(m));
    mat = mat + extended * projector * dagger(extended);
  }

  // The construction yields a genuine state; failure means a bug, so the
  // validator's verdict is converted accordingly.
  try {
    validate_state(mat);
  } catch (const Error& e) {
    throw InternalInvariantError(
        std::string("acausal_conditional: output failed state validation (") + e.what() +
        ")");
  }
  require_uniform_reduction(mat, dims, "acausal_conditional");
  return ConditionalState{dims, std::move(mat), ConditionalKind::Acausal};
}

ConditionalState causal_conditional(const KrausChannel& channel) {
  ConditionalState acausal = acausal_conditional(channel);
  ComplexMatrix mat = partial_transpose(acausal.mat, acausal.dims, Subsystem::One);
  if (hermiticity_defect(mat) > tol::kHermitian) {
    throw InternalInvariantError("causal_conditional: partial transpose is not Hermitian");
  }
  require_uniform_reduction(mat, acausal.dims, "causal_conditional");
  return ConditionalState{acausal.dims, std::move(mat), ConditionalKind::Causal};
}

ComplexMatrix star_product(const ComplexMatrix& prior, const ConditionalState& cond) {
  const std::size_t da = cond.dims.d1;
  if (!prior.is_square() || prior.rows() != da) {
    throw DimensionError("star_product: prior must be " + std::to_string(da) + "x" +
                         std::to_string(da) + ", got " + std::to_string(prior.rows()) + "x" +
                         std::to_string(prior.cols()));
  }
  const Complex tr = trace(prior);
  if (std::abs(tr - Complex{1.0, 0.0}) > tol::kUnitTrace) {
    throw TraceError("star_product: prior trace deviates from 1 by " +
                     detail::num(std::abs(tr - Complex{1.0, 0.0})));
  }
  // psd_sqrt rejects non-Hermitian or negative priors.
  const ComplexMatrix sandwich = kron(psd_sqrt(prior), ComplexMatrix::identity(cond.dims.d2));
  ComplexMatrix out = sandwich * cond.mat * sandwich;
  return scale(out, Complex{static_cast<double>(da), 0.0});
}

StarEqualityReport verify_star_equalities(const DensityMatrix& rho,
                                          const KrausChannel& channel, double tol) {
  const LiftedOperator lifted = lifted_operator(rho, channel);
  const DensityMatrix tau = bipartite_state(lifted);

  const ComplexMatrix via_acausal =
      star_product(transpose(rho.matrix()), acausal_conditional(channel));
  const ComplexMatrix via_causal = star_product(rho.matrix(), causal_conditional(channel));

  StarEqualityReport report;
  report.acausal_deviation = approx_eq(via_acausal, tau.matrix(), tol).max_deviation;
  report.causal_deviation = approx_eq(via_causal, lifted.mat, tol).max_deviation;
  report.tolerance = tol;
  report.pass = report.acausal_deviation <= tol && report.causal_deviation <= tol;
  return report;
}

}  // namespace qcf
