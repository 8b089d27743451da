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

// Hermitian eigendecomposition is the single numerical primitive behind
// psd_sqrt and all PSD validation. Eigen's SelfAdjointEigenSolver does the
// heavy lifting; it stays an implementation detail of this translation unit.

#include <Eigen/Dense>

#include <cmath>
#include <string>

#include "qcf/complex_matrix.hpp"
#include "qcf/tolerances.hpp"
#include "number_format.hpp"

namespace qcf {

namespace {

using EigenCMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

void require_hermitian(const ComplexMatrix& m, const char* op) {
  if (!m.is_square()) {
    throw DimensionError(std::string(op) + ": matrix is not square");
  }
  const double defect = hermiticity_defect(m);
  const double tolerance = tol::kHermitian * (1.0 + max_abs_entry(m));
  if (defect > tolerance) {
    throw HermiticityError(std::string(op) + ": hermiticity defect " + detail::num(defect) +
                           " exceeds tolerance " + detail::num(tolerance));
  }
}

EigenCMatrix to_eigen_symmetrized(const ComplexMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.rows());
  EigenCMatrix e(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      e(i, j) = 0.5 * (m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) +
                       std::conj(m(static_cast<std::size_t>(j), static_cast<std::size_t>(i))));
  return e;
}

}  // namespace

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m) {
  require_hermitian(m, "hermitian_eigensystem");
  Eigen::SelfAdjointEigenSolver<EigenCMatrix> solver(to_eigen_symmetrized(m),
                                                     Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw InternalInvariantError("hermitian_eigensystem: eigensolver did not converge");
  }
  const std::size_t n = m.rows();
  HermitianEigensystem out;
  out.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.vectors(i, j) =
          solver.eigenvectors()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  require_hermitian(m, "hermitian_eigenvalues");
  Eigen::SelfAdjointEigenSolver<EigenCMatrix> solver(to_eigen_symmetrized(m),
                                                     Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw InternalInvariantError("hermitian_eigenvalues: eigensolver did not converge");
  }
  return std::vector<double>(solver.eigenvalues().data(), solver.eigenvalues().data() + m.rows());
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const HermitianEigensystem eig = hermitian_eigensystem(m);
  const std::size_t n = m.rows();

  double max_abs_eig = 0.0;
  for (double ev : eig.eigenvalues) max_abs_eig = std::max(max_abs_eig, std::abs(ev));
  const double slack = tol::psd_slack(max_abs_eig);

  std::vector<double> roots(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double ev = eig.eigenvalues[k];
    if (ev < -slack) {
      throw NegativityError("psd_sqrt: eigenvalue " + detail::num(ev) +
                            " below -" + detail::num(slack));
    }
    roots[k] = ev > 0.0 ? std::sqrt(ev) : 0.0;
  }

  // U sqrt(D) U^dag, re-symmetrized so the result is exactly Hermitian.
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex s{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k) {
        s += eig.vectors(i, k) * roots[k] * std::conj(eig.vectors(j, k));
      }
      out(i, j) = s;
      if (i == j) {
        out(i, i) = Complex{s.real(), 0.0};
      } else {
        out(j, i) = std::conj(s);
      }
    }
  }
  return out;
}

}  // namespace qcf
