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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qcf/errors.hpp"

namespace qcf {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. The substrate for every operator in the
/// library: states, POVM effects, Kraus operators and the bipartite objects
/// built from them.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// rows x cols zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  /// Takes ownership of row-major entries; entries.size() must be rows*cols.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix zero(std::size_t rows, std::size_t cols);

  /// Row-of-rows literal, mostly for tests and presets.
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::size_t size() const { return entries_.size(); }

  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return entries_; }
  std::span<Complex> entries() { return entries_; }

  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// Tensor factorization of a bipartite space: system 1 of dimension d1 is the
/// left (slow) factor, system 2 of dimension d2 the right (fast) one, so the
/// flat index of (i, j) is i*d2 + j.
struct BipartiteDims {
  std::size_t d1 = 0;
  std::size_t d2 = 0;

  BipartiteDims() = default;
  BipartiteDims(std::size_t d1_, std::size_t d2_);

  std::size_t total() const { return d1 * d2; }

  friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;
};

/// Selects which tensor factor an operation acts on.
enum class Subsystem { One = 1, Two = 2 };

// ---------------------------------------------------------------------------
// Elementwise / structural algebra
// ---------------------------------------------------------------------------

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const ComplexMatrix& m, Complex factor);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix transpose(const ComplexMatrix& m);
ComplexMatrix conj(const ComplexMatrix& m);
ComplexMatrix dagger(const ComplexMatrix& m);
Complex trace(const ComplexMatrix& m);

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) { return add(a, b); }
inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) { return sub(a, b); }
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }
inline ComplexMatrix operator*(Complex s, const ComplexMatrix& m) { return scale(m, s); }
inline ComplexMatrix operator*(double s, const ComplexMatrix& m) { return scale(m, s); }

/// Kronecker product; the left operand is the slow factor, so
/// (i,j) of the product maps to flat index i*b.rows + j.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out one factor of a (d1*d2)-dimensional square operator. The result
/// acts on the remaining factor and has the same trace as the input.
ComplexMatrix partial_trace(const ComplexMatrix& m, const BipartiteDims& dims, Subsystem which);

/// Transposes the indices of one factor in the fixed computational basis.
/// An involution; preserves trace and Hermiticity.
ComplexMatrix partial_transpose(const ComplexMatrix& m, const BipartiteDims& dims, Subsystem which);

// ---------------------------------------------------------------------------
// Hermitian eigenstructure
// ---------------------------------------------------------------------------

/// Eigenvalues ascending; eigenvectors as columns, vectors.col(k) <-> eigenvalues[k].
struct HermitianEigensystem {
  std::vector<double> eigenvalues;
  ComplexMatrix vectors;
};

/// Full eigensystem of a Hermitian matrix. Throws HermiticityError when m is
/// not Hermitian within tolerance (relative to its largest entry).
HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m);

/// Eigenvalues only, ascending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Hermitian PSD square root via eigendecomposition. Eigenvalues within the
/// PSD slack below zero are clamped to 0; more negative ones raise
/// NegativityError.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

// ---------------------------------------------------------------------------
// Comparison
// ---------------------------------------------------------------------------

/// Outcome of an entrywise comparison: the verdict plus the worst deviation
/// and where it sits.
struct ApproxResult {
  bool equal = false;
  double max_deviation = 0.0;
  std::size_t row = 0;
  std::size_t col = 0;

  explicit operator bool() const { return equal; }
};

/// True iff max entrywise |a-b| <= tol; always reports the max deviation.
ApproxResult approx_eq(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

double max_abs_entry(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);

/// Max entrywise |m - m^dag|; 0 for exactly Hermitian input.
double hermiticity_defect(const ComplexMatrix& m);

}  // namespace qcf
