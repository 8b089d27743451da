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

#include "qcf/quantum_objects.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qcf/tolerances.hpp"
#include "number_format.hpp"

namespace qcf {

std::string_view frame_name(CausalFrame frame) {
  switch (frame) {
    case CausalFrame::AlphaForward: return "alpha";
    case CausalFrame::BetaReverse: return "beta";
    case CausalFrame::GammaSpacelike: return "gamma";
  }
  return "unknown";
}

DensityMatrix validate_state(const ComplexMatrix& mat) {
  if (!mat.is_square()) {
    throw DimensionError("validate_state: matrix is not square");
  }
  if (!mat.all_finite()) {
    throw HermiticityError("validate_state: matrix has non-finite entries");
  }
  const double defect = hermiticity_defect(mat);
  if (defect > tol::kHermitian) {
    throw HermiticityError("validate_state: hermiticity defect " + detail::num(defect) +
                           " exceeds " + detail::num(tol::kHermitian));
  }
  const double tr_dev = std::abs(trace(mat) - Complex{1.0, 0.0});
  if (tr_dev > tol::kUnitTrace) {
    throw TraceError("validate_state: |trace - 1| = " + detail::num(tr_dev) + " exceeds " +
                     detail::num(tol::kUnitTrace));
  }

  const std::vector<double> eigs = hermitian_eigenvalues(mat);
  const double min_eig = eigs.front();
  const double max_eig = eigs.back();
  if (min_eig < -tol::psd_slack(std::abs(max_eig))) {
    throw NegativityError("validate_state: eigenvalue " + detail::num(min_eig) +
                          " is negative beyond tolerance");
  }

  DensityMatrix state;
  state.mat_ = mat;
  state.min_eigenvalue_ = min_eig;
  state.max_eigenvalue_ = max_eig;
  state.full_rank_ = min_eig >= tol::kFullRank;
  state.pure_ = max_eig >= 1.0 - tol::kPurityGap;
  return state;
}

Povm validate_povm(std::vector<ComplexMatrix> effects, std::vector<std::string> labels,
                   std::string_view auto_label_prefix) {
  if (effects.size() < 2) {
    throw CompletenessError("validate_povm: a POVM needs at least 2 effects, got " +
                            std::to_string(effects.size()));
  }
  const std::size_t dim = effects.front().rows();
  ComplexMatrix sum(dim, dim);
  for (std::size_t i = 0; i < effects.size(); ++i) {
    const ComplexMatrix& e = effects[i];
    if (!e.is_square() || e.rows() != dim) {
      throw DimensionError("validate_povm: effect " + std::to_string(i) + " is " +
                           std::to_string(e.rows()) + "x" + std::to_string(e.cols()) +
                           ", expected " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    if (!e.all_finite()) {
      throw HermiticityError("validate_povm: effect " + std::to_string(i) +
                             " has non-finite entries");
    }
    const double defect = hermiticity_defect(e);
    if (defect > tol::kHermitian * (1.0 + max_abs_entry(e))) {
      throw HermiticityError("validate_povm: effect " + std::to_string(i) +
                             " is not Hermitian (defect " + detail::num(defect) + ")");
    }
    const std::vector<double> eigs = hermitian_eigenvalues(e);
    if (eigs.front() < -tol::psd_slack(std::abs(eigs.back()))) {
      throw NegativityError("validate_povm: effect " + std::to_string(i) + " has eigenvalue " +
                            detail::num(eigs.front()));
    }
    sum = add(sum, e);
  }

  const ApproxResult complete = approx_eq(sum, ComplexMatrix::identity(dim), tol::kUnitTrace);
  const double frob_defect = frobenius_norm(sub(sum, ComplexMatrix::identity(dim)));
  if (!complete.equal || frob_defect > tol::kUnitTrace) {
    throw CompletenessError("validate_povm: effects sum deviates from identity by " +
                            detail::num(frob_defect) + " (Frobenius)");
  }

  if (labels.empty()) {
    labels.reserve(effects.size());
    for (std::size_t i = 0; i < effects.size(); ++i) {
      labels.push_back(std::string(auto_label_prefix) + std::to_string(i));
    }
  }
  if (labels.size() != effects.size()) {
    throw DimensionError("validate_povm: " + std::to_string(labels.size()) + " labels for " +
                         std::to_string(effects.size()) + " effects");
  }

  Povm povm;
  povm.dim_ = dim;
  povm.effects_ = std::move(effects);
  povm.labels_ = std::move(labels);
  return povm;
}

KrausChannel validate_channel(std::vector<ComplexMatrix> kraus, std::size_t dim_in,
                              std::size_t dim_out) {
  if (kraus.empty()) {
    throw DimensionError("validate_channel: empty Kraus list");
  }
  for (std::size_t m = 0; m < kraus.size(); ++m) {
    const ComplexMatrix& k = kraus[m];
    if (k.rows() != dim_out || k.cols() != dim_in) {
      throw DimensionError("validate_channel: Kraus operator " + std::to_string(m) + " is " +
                           std::to_string(k.rows()) + "x" + std::to_string(k.cols()) +
                           ", expected " + std::to_string(dim_out) + "x" +
                           std::to_string(dim_in));
    }
    if (!k.all_finite()) {
      throw TracePreservationError("validate_channel: Kraus operator " + std::to_string(m) +
                                   " has non-finite entries");
    }
  }

  // sum_m K_m^dag K_m = I_{dim_in}
  ComplexMatrix sum(dim_in, dim_in);
  for (const ComplexMatrix& k : kraus) {
    sum = add(sum, matmul(dagger(k), k));
  }
  const double defect = frobenius_norm(sub(sum, ComplexMatrix::identity(dim_in)));
  if (defect > tol::kUnitTrace) {
    throw TracePreservationError("validate_channel: sum K^dag K deviates from identity by " +
                                 detail::num(defect) + " (Frobenius)");
  }

  KrausChannel channel;
  channel.dim_in_ = dim_in;
  channel.dim_out_ = dim_out;
  channel.kraus_ = std::move(kraus);
  return channel;
}

void validate_scenario(const Scenario& scenario) {
  const std::size_t d1 = scenario.dims.d1;
  const std::size_t d2 = scenario.dims.d2;
  if (scenario.rho.dim() != d1) {
    throw DimensionError("scenario '" + scenario.name + "': rho has dimension " +
                         std::to_string(scenario.rho.dim()) + ", expected d1 = " +
                         std::to_string(d1));
  }
  if (scenario.channel.dim_in() != d1 || scenario.channel.dim_out() != d2) {
    throw DimensionError("scenario '" + scenario.name + "': channel is " +
                         std::to_string(scenario.channel.dim_in()) + "->" +
                         std::to_string(scenario.channel.dim_out()) + ", expected " +
                         std::to_string(d1) + "->" + std::to_string(d2));
  }
  if (scenario.povm_a.dim() != d1) {
    throw DimensionError("scenario '" + scenario.name + "': povm_a has dimension " +
                         std::to_string(scenario.povm_a.dim()) + ", expected " +
                         std::to_string(d1));
  }
  if (scenario.povm_b.dim() != d2) {
    throw DimensionError("scenario '" + scenario.name + "': povm_b has dimension " +
                         std::to_string(scenario.povm_b.dim()) + ", expected " +
                         std::to_string(d2));
  }
  if (scenario.povm_a_alt && scenario.povm_a_alt->dim() != d1) {
    throw DimensionError("scenario '" + scenario.name + "': povm_a_alt has dimension " +
                         std::to_string(scenario.povm_a_alt->dim()) + ", expected " +
                         std::to_string(d1));
  }
  if (!scenario.pure_fallback && !scenario.rho.is_full_rank()) {
    throw RankError("scenario '" + scenario.name +
                    "': rho is not full rank (min eigenvalue " +
                    std::to_string(scenario.rho.min_eigenvalue()) +
                    "); mark pure_fallback to allow it");
  }
}

}  // namespace qcf
