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

#include "qcf/random_objects.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qcf/errors.hpp"
#include "qcf/tolerances.hpp"

namespace qcf {

namespace {

constexpr int kMaxRetries = 8;

// Frobenius inner product <a, b> = sum conj(a_ij) b_ij over one column pair.
Complex column_dot(const ComplexMatrix& m, std::size_t col_a, std::size_t col_b) {
  Complex acc{0.0, 0.0};
  for (std::size_t r = 0; r < m.rows(); ++r) {
    acc += std::conj(m(r, col_a)) * m(r, col_b);
  }
  return acc;
}

double column_norm(const ComplexMatrix& m, std::size_t col) {
  return std::sqrt(column_dot(m, col, col).real());
}

}  // namespace

std::size_t Prng::index(std::size_t n) {
  std::uniform_int_distribution<std::size_t> dist(0, n - 1);
  return dist(engine_);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 finalizer applied to the stream offset; avalanche guarantees
  // that adjacent indices produce uncorrelated engine seeds.
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ComplexMatrix random_ginibre(std::size_t rows, std::size_t cols, Prng& prng) {
  ComplexMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      out(r, c) = prng.complex_normal();
    }
  }
  return out;
}

DensityMatrix random_state(std::size_t dim, std::uint64_t seed, bool ensure_full_rank) {
  if (dim < 2) {
    throw DimensionError("random_state: dim must be at least 2, got " + std::to_string(dim));
  }
  Prng prng(seed);
  const ComplexMatrix g = random_ginibre(dim, dim, prng);
  ComplexMatrix rho = g * dagger(g);
  const Complex tr = trace(rho);
  rho = scale(rho, Complex{1.0 / tr.real(), 0.0});

  if (ensure_full_rank) {
    const std::vector<double> eigs = hermitian_eigenvalues(rho);
    if (eigs.front() < tol::kFullRank) {
      // Mix toward the maximally mixed state; a Ginibre square draw is almost
      // surely full rank, so one repair step suffices in practice.
      const double lambda = tol::kMix;
      ComplexMatrix mixed = scale(rho, Complex{1.0 - lambda, 0.0});
      const Complex diag_boost{lambda / static_cast<double>(dim), 0.0};
      for (std::size_t i = 0; i < dim; ++i) {
        mixed(i, i) += diag_boost;
      }
      rho = std::move(mixed);
    }
  }
  return validate_state(rho);
}

Povm random_povm(std::size_t dim, std::size_t n_outcomes, std::uint64_t seed,
                 std::string_view label_prefix) {
  if (dim < 2) {
    throw DimensionError("random_povm: dim must be at least 2, got " + std::to_string(dim));
  }
  if (n_outcomes < 2) {
    throw CompletenessError("random_povm: a measurement needs at least 2 outcomes, got " +
                            std::to_string(n_outcomes));
  }

  for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
    Prng prng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));

    std::vector<ComplexMatrix> raw;
    raw.reserve(n_outcomes);
    ComplexMatrix s(dim, dim);
    for (std::size_t i = 0; i < n_outcomes; ++i) {
      const ComplexMatrix g = random_ginibre(dim, dim, prng);
      ComplexMatrix m = g * dagger(g);
      s = s + m;
      raw.push_back(std::move(m));
    }

    // S is PSD by construction; it is singular only on a measure-zero set of
    // draws, handled by retrying with a re-derived seed.
    const HermitianEigensystem es = hermitian_eigensystem(s);
    if (es.eigenvalues.front() < tol::kFullRank * (1.0 + es.eigenvalues.back())) {
      continue;
    }
    ComplexMatrix s_inv_sqrt(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) {
        Complex acc{0.0, 0.0};
        for (std::size_t k = 0; k < dim; ++k) {
          acc += es.vectors(r, k) * std::conj(es.vectors(c, k)) /
                 std::sqrt(es.eigenvalues[k]);
        }
        s_inv_sqrt(r, c) = acc;
      }
    }

    std::vector<ComplexMatrix> effects;
    effects.reserve(n_outcomes);
    for (const ComplexMatrix& m : raw) {
      effects.push_back(s_inv_sqrt * m * s_inv_sqrt);
    }
    return validate_povm(std::move(effects), {}, label_prefix);
  }
  throw SingularityError("random_povm: normalization operator remained singular after " +
                         std::to_string(kMaxRetries + 1) + " attempts (dim=" +
                         std::to_string(dim) + ", n_outcomes=" + std::to_string(n_outcomes) +
                         ", seed=" + std::to_string(seed) + ")");
}

KrausChannel random_channel(std::size_t dim_in, std::size_t dim_out, std::size_t n_kraus,
                            std::uint64_t seed) {
  if (dim_in < 2 || dim_out < 2) {
    throw DimensionError("random_channel: dims must be at least 2, got dim_in=" +
                         std::to_string(dim_in) + ", dim_out=" + std::to_string(dim_out));
  }
  if (n_kraus == 0) {
    throw DimensionError("random_channel: n_kraus must be positive");
  }
  if (n_kraus * dim_out < dim_in) {
    throw DimensionError("random_channel: n_kraus*dim_out (" +
                         std::to_string(n_kraus * dim_out) + ") must be >= dim_in (" +
                         std::to_string(dim_in) + ") for an isometric dilation");
  }

  const std::size_t stacked_rows = n_kraus * dim_out;
  for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
    Prng prng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    ComplexMatrix v = random_ginibre(stacked_rows, dim_in, prng);

    // Modified Gram-Schmidt on the columns; the result V satisfies
    // V^dag V = I, so the stacked blocks K_m are trace preserving.
    bool degenerate = false;
    for (std::size_t c = 0; c < dim_in; ++c) {
      for (std::size_t p = 0; p < c; ++p) {
        const Complex proj = column_dot(v, p, c);
        for (std::size_t r = 0; r < stacked_rows; ++r) {
          v(r, c) -= proj * v(r, p);
        }
      }
      const double norm = column_norm(v, c);
      if (norm < tol::kFullRank) {
        degenerate = true;
        break;
      }
      for (std::size_t r = 0; r < stacked_rows; ++r) {
        v(r, c) /= norm;
      }
    }
    if (degenerate) {
      continue;
    }

    std::vector<ComplexMatrix> kraus;
    kraus.reserve(n_kraus);
    for (std::size_t m = 0; m < n_kraus; ++m) {
      ComplexMatrix k(dim_out, dim_in);
      for (std::size_t r = 0; r < dim_out; ++r) {
        for (std::size_t c = 0; c < dim_in; ++c) {
          k(r, c) = v(m * dim_out + r, c);
        }
      }
      kraus.push_back(std::move(k));
    }
    return validate_channel(std::move(kraus), dim_in, dim_out);
  }
  throw RankError("random_channel: Ginibre draw stayed column-rank deficient after " +
                  std::to_string(kMaxRetries + 1) + " attempts (dim_in=" +
                  std::to_string(dim_in) + ", dim_out=" + std::to_string(dim_out) +
                  ", n_kraus=" + std::to_string(n_kraus) + ", seed=" + std::to_string(seed) +
                  ")");
}

}  // namespace qcf
