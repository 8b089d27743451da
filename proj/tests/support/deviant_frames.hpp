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

// Deliberately wrong frame pipelines. They prove the production pipelines
// have teeth: each deviant swaps one convention (conjugation or partial
// transpose) and must visibly disagree with the correct probabilities on
// generic complex scenarios. Raw double grids, not JointDistribution — the
// deviants are allowed to produce garbage (negative entries included).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "qcf/complex_matrix.hpp"
#include "qcf/observer_frames.hpp"
#include "qcf/quantum_objects.hpp"

namespace qcf_test {

// Row-major n_a x n_b grid of Re tr[(a_i (x) b_j) m].
inline std::vector<double> joint_grid(const qcf::Scenario& sc, const qcf::ComplexMatrix& m,
                                      bool transpose_a, bool transpose_b) {
  std::vector<double> grid;
  grid.reserve(sc.povm_a.n_outcomes() * sc.povm_b.n_outcomes());
  for (const auto& a : sc.povm_a.effects()) {
    const qcf::ComplexMatrix a_used = transpose_a ? qcf::transpose(a) : a;
    for (const auto& b : sc.povm_b.effects()) {
      const qcf::ComplexMatrix b_used = transpose_b ? qcf::transpose(b) : b;
      grid.push_back(qcf::trace(qcf::matmul(qcf::kron(a_used, b_used), m)).real());
    }
  }
  return grid;
}

// Reversed-causal-order frame computed with conjugate transposition instead
// of plain transposition. On Hermitian effects the dagger is a no-op, so the
// lifted operator's transpose goes uncompensated: p'(i,j) = tr[(a_i (x) b_j) T^T].
inline std::vector<double> beta_with_dagger(const qcf::Scenario& sc,
                                            const qcf::LiftedOperator& lifted) {
  return joint_grid(sc, qcf::transpose(lifted.mat), /*transpose_a=*/false, /*transpose_b=*/false);
}

// Space-like frame with the partial transpose omitted: the lifted operator is
// used directly in place of the bipartite state: p'(i,j) = tr[(a_i^T (x) b_j) T].
inline std::vector<double> gamma_without_partial_transpose(const qcf::Scenario& sc,
                                                           const qcf::LiftedOperator& lifted) {
  return joint_grid(sc, lifted.mat, /*transpose_a=*/true, /*transpose_b=*/false);
}

// Space-like frame with the wrong convention on the second system: b_j is
// transposed even though only the first factor is reversed:
// p'(i,j) = tr[(a_i^T (x) b_j^T) tau].
inline std::vector<double> gamma_with_transposed_b(const qcf::Scenario& sc,
                                                   const qcf::ComplexMatrix& tau) {
  return joint_grid(sc, tau, /*transpose_a=*/true, /*transpose_b=*/true);
}

inline double max_grid_deviation(const std::vector<double>& grid,
                                 const std::vector<double>& reference) {
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    worst = std::max(worst, std::abs(grid[k] - reference[k]));
  }
  return worst;
}

}  // namespace qcf_test
