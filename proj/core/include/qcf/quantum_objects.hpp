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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcf/complex_matrix.hpp"

namespace qcf {

/// Validated quantum state: Hermitian, PSD, unit trace. Eigen-facts are
/// computed once at validation and cached.
class DensityMatrix {
 public:
  std::size_t dim() const { return mat_.rows(); }
  const ComplexMatrix& matrix() const { return mat_; }
  double min_eigenvalue() const { return min_eigenvalue_; }
  double max_eigenvalue() const { return max_eigenvalue_; }
  bool is_full_rank() const { return full_rank_; }
  bool is_pure() const { return pure_; }

 private:
  friend DensityMatrix validate_state(const ComplexMatrix& mat);
  DensityMatrix() = default;

  ComplexMatrix mat_;
  double min_eigenvalue_ = 0.0;
  double max_eigenvalue_ = 0.0;
  bool full_rank_ = false;
  bool pure_ = false;
};

/// Validated POVM: PSD effects summing to the identity, one label per
/// outcome. Needs at least two effects; a one-outcome measurement carries no
/// information.
class Povm {
 public:
  std::size_t dim() const { return dim_; }
  std::size_t n_outcomes() const { return effects_.size(); }
  const std::vector<ComplexMatrix>& effects() const { return effects_; }
  const ComplexMatrix& effect(std::size_t i) const { return effects_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

 private:
  friend Povm validate_povm(std::vector<ComplexMatrix> effects, std::vector<std::string> labels,
                            std::string_view auto_label_prefix);
  Povm() = default;

  std::size_t dim_ = 0;
  std::vector<ComplexMatrix> effects_;
  std::vector<std::string> labels_;
};

/// Validated CPTP map from a d_in-dimensional system to a d_out-dimensional
/// one, in Kraus form: rho -> sum_m K_m rho K_m^dag with
/// sum_m K_m^dag K_m = I.
class KrausChannel {
 public:
  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }
  std::size_t n_kraus() const { return kraus_.size(); }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  const ComplexMatrix& kraus_op(std::size_t m) const { return kraus_[m]; }

 private:
  friend KrausChannel validate_channel(std::vector<ComplexMatrix> kraus, std::size_t dim_in,
                                       std::size_t dim_out);
  KrausChannel() = default;

  std::size_t dim_in_ = 0;
  std::size_t dim_out_ = 0;
  std::vector<ComplexMatrix> kraus_;
};

/// The three causal arrangements an observer can assume for the pair of
/// outcome events: a causes b, b causes a, or neither causes the other.
enum class CausalFrame {
  AlphaForward,
  BetaReverse,
  GammaSpacelike,
};

std::string_view frame_name(CausalFrame frame);

/// One two-device experiment: a state on system 1, a channel from system 1
/// to system 2, and one POVM per device. The optional alternate A-POVM feeds
/// no-signalling checks. pure_fallback marks scenarios whose state is
/// deliberately rank deficient; those are legal input but rejected by the
/// frame pipelines, which need a full-rank state.
struct Scenario {
  std::string name;
  BipartiteDims dims;
  DensityMatrix rho;
  KrausChannel channel;
  Povm povm_a;
  Povm povm_b;
  std::optional<Povm> povm_a_alt;
  bool pure_fallback = false;
};

// ---------------------------------------------------------------------------
// Validators
// ---------------------------------------------------------------------------

/// Checks Hermiticity, positivity and unit trace, caching the eigen-facts.
/// Throws HermiticityError, NegativityError or TraceError.
DensityMatrix validate_state(const ComplexMatrix& mat);

/// Checks PSD effects and completeness (sum = I). When labels is empty they
/// default to prefix0, prefix1, ...
/// Throws CompletenessError, NegativityError, HermiticityError or DimensionError.
Povm validate_povm(std::vector<ComplexMatrix> effects, std::vector<std::string> labels = {},
                   std::string_view auto_label_prefix = "a");

/// Checks shapes and trace preservation (sum_m K_m^dag K_m = I).
/// Throws TracePreservationError or DimensionError.
KrausChannel validate_channel(std::vector<ComplexMatrix> kraus, std::size_t dim_in,
                              std::size_t dim_out);

/// Cross-checks every dimension field of an assembled scenario and enforces
/// the full-rank requirement unless the scenario is marked pure_fallback.
/// Throws DimensionError or RankError.
void validate_scenario(const Scenario& scenario);

}  // namespace qcf
