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

#include "qcf/complex_matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qcf {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

void require_bipartite(const ComplexMatrix& m, const BipartiteDims& dims, const char* op) {
  if (!m.is_square() || m.rows() != dims.total()) {
    throw DimensionError(std::string(op) + ": operator is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square of dimension " +
                         std::to_string(dims.total()) + " = " + std::to_string(dims.d1) + "*" +
                         std::to_string(dims.d2));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("ComplexMatrix: dimensions must be positive");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("ComplexMatrix: dimensions must be positive");
  }
  if (entries_.size() != rows * cols) {
    throw DimensionError("ComplexMatrix: entry count " + std::to_string(entries_.size()) +
                         " does not equal rows*cols = " + std::to_string(rows * cols));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t n_rows = rows.size();
  if (n_rows == 0) throw DimensionError("from_rows: no rows");
  const std::size_t n_cols = rows.begin()->size();
  ComplexMatrix m(n_rows, n_cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != n_cols) throw DimensionError("from_rows: ragged rows");
    std::size_t c = 0;
    for (const auto& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

bool ComplexMatrix::all_finite() const {
  for (const auto& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

BipartiteDims::BipartiteDims(std::size_t d1_, std::size_t d2_) : d1(d1_), d2(d2_) {
  if (d1 < 2 || d2 < 2) {
    throw DimensionError("BipartiteDims: both factors must have dimension >= 2, got " +
                         std::to_string(d1) + " and " + std::to_string(d2));
  }
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "add");
  ComplexMatrix out = a;
  auto oe = out.entries();
  auto be = b.entries();
  for (std::size_t i = 0; i < oe.size(); ++i) oe[i] += be[i];
  return out;
}

ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "sub");
  ComplexMatrix out = a;
  auto oe = out.entries();
  auto be = b.entries();
  for (std::size_t i = 0; i < oe.size(); ++i) oe[i] -= be[i];
  return out;
}

ComplexMatrix scale(const ComplexMatrix& m, Complex factor) {
  ComplexMatrix out = m;
  for (auto& z : out.entries()) z *= factor;
  return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: inner dimensions " + std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + " do not match");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

ComplexMatrix transpose(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

ComplexMatrix conj(const ComplexMatrix& m) {
  ComplexMatrix out = m;
  for (auto& z : out.entries()) z = std::conj(z);
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
  return out;
}

Complex trace(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("trace: matrix is not square");
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{0.0, 0.0}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const BipartiteDims& dims, Subsystem which) {
  require_bipartite(m, dims, "partial_trace");
  const std::size_t d1 = dims.d1;
  const std::size_t d2 = dims.d2;
  if (which == Subsystem::One) {
    // out[a,b] = sum_k m[(k,a),(k,b)]
    ComplexMatrix out(d2, d2);
    for (std::size_t a = 0; a < d2; ++a)
      for (std::size_t b = 0; b < d2; ++b)
        for (std::size_t k = 0; k < d1; ++k) out(a, b) += m(k * d2 + a, k * d2 + b);
    return out;
  }
  // out[i,j] = sum_l m[(i,l),(j,l)]
  ComplexMatrix out(d1, d1);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d1; ++j)
      for (std::size_t l = 0; l < d2; ++l) out(i, j) += m(i * d2 + l, j * d2 + l);
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const BipartiteDims& dims,
                                Subsystem which) {
  require_bipartite(m, dims, "partial_transpose");
  const std::size_t d1 = dims.d1;
  const std::size_t d2 = dims.d2;
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t a = 0; a < d2; ++a)
      for (std::size_t j = 0; j < d1; ++j)
        for (std::size_t b = 0; b < d2; ++b) {
          if (which == Subsystem::One) {
            out(i * d2 + a, j * d2 + b) = m(j * d2 + a, i * d2 + b);
          } else {
            out(i * d2 + a, j * d2 + b) = m(i * d2 + b, j * d2 + a);
          }
        }
  return out;
}

ApproxResult approx_eq(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  require_same_shape(a, b, "approx_eq");
  ApproxResult res;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double dev = std::abs(a(i, j) - b(i, j));
      if (dev > res.max_deviation) {
        res.max_deviation = dev;
        res.row = i;
        res.col = j;
      }
    }
  }
  res.equal = res.max_deviation <= tol;
  return res;
}

double max_abs_entry(const ComplexMatrix& m) {
  double mx = 0.0;
  for (const auto& z : m.entries()) mx = std::max(mx, std::abs(z));
  return mx;
}

double frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& z : m.entries()) s += std::norm(z);
  return std::sqrt(s);
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("hermiticity_defect: matrix is not square");
  double mx = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      mx = std::max(mx, std::abs(m(i, j) - std::conj(m(j, i))));
  return mx;
}

}  // namespace qcf
