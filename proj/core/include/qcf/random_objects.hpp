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
#include <random>

#include "qcf/complex_matrix.hpp"
#include "qcf/quantum_objects.hpp"

namespace qcf {

/// Deterministic random source. Reproducibility contract: the same (seed,
/// draw sequence) yields bitwise-identical output within one build; no
/// cross-implementation bit equality is promised.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  Complex complex_normal() {
    const double re = normal();
    const double im = normal();
    return Complex{re, im};
  }
  std::uint64_t next_u64() { return engine_(); }

  /// Uniform index in [0, n).
  std::size_t index(std::size_t n);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Decorrelates seeds derived from a base seed and a stream index
/// (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Matrix of independent standard complex Gaussians.
ComplexMatrix random_ginibre(std::size_t rows, std::size_t cols, Prng& prng);

/// Ginibre-induced random state G G^dag / tr(G G^dag). With ensure_full_rank,
/// a rank-deficient draw is mixed with I/dim until it clears the full-rank
/// threshold.
DensityMatrix random_state(std::size_t dim, std::uint64_t seed, bool ensure_full_rank);

/// Random n-outcome POVM: M_i = G_i G_i^dag, effects S^{-1/2} M_i S^{-1/2}
/// with S = sum M_i, complete by construction. Retries internally (at most 8
/// times) when S is numerically singular; throws SingularityError after that.
Povm random_povm(std::size_t dim, std::size_t n_outcomes, std::uint64_t seed,
                 std::string_view label_prefix = "a");

/// Random channel with n_kraus Kraus operators: orthonormalize the columns of
/// a (n_kraus*dim_out) x dim_in Ginibre draw into an isometry and slice it
/// into dim_out x dim_in blocks, trace preserving by construction. Retries on
/// a rank-deficient draw (at most 8 times); throws RankError after that.
/// Requires n_kraus*dim_out >= dim_in.
KrausChannel random_channel(std::size_t dim_in, std::size_t dim_out, std::size_t n_kraus,
                            std::uint64_t seed);

}  // namespace qcf
