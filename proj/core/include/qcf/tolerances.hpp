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

namespace qcf::tol {

// Hermiticity and unit-trace checks on states, effects and channels.
inline constexpr double kHermitian = 1e-10;
inline constexpr double kUnitTrace = 1e-10;

// PSD slack scales with the spectral radius so large-norm operators are not
// rejected spuriously: eigenvalues >= -psd_slack(max_abs_eig) are accepted
// and clamped to zero.
inline constexpr double kPsdRelative = 1e-10;
inline constexpr double psd_slack(double max_abs_eigenvalue) {
  return kPsdRelative * (1.0 + max_abs_eigenvalue);
}

// A state counts as full rank when its smallest eigenvalue clears this bound
// (absolute; unit trace fixes the scale).
inline constexpr double kFullRank = 1e-9;

// Mixing weight used to repair rank-deficient random draws:
// rho <- (1 - kMix) rho + kMix I/d.
inline constexpr double kMix = 1e-3;

// A state is pure when its top eigenvalue reaches 1 - kPurityGap.
inline constexpr double kPurityGap = 1e-10;

// Probabilities below this are treated as "outcome never happens".
inline constexpr double kZeroProb = 1e-12;

// Probabilities in [-kProbClamp, 0) are floating-point noise and clamp to 0;
// anything below -kProbClamp is an internal invariant failure.
inline constexpr double kProbClamp = 1e-10;

// Distributions must sum to 1 within this.
inline constexpr double kNormalization = 1e-10;

// Default verification tolerances. Three pipelines of O(d^3) double-precision
// eigen/product work accumulate well under 1e-12 at the supported dimensions;
// the frame default keeps two orders of headroom.
inline constexpr double kFrameEquality = 1e-10;
inline constexpr double kChoiIdentity = 1e-11;
inline constexpr double kStarEquality = 1e-11;
inline constexpr double kNoSignalling = 1e-12;

}  // namespace qcf::tol
