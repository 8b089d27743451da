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

#include <doctest.h>

#include <cmath>
#include <utility>
#include <vector>

#include "qcf/quantum_objects.hpp"
#include "qcf/random_objects.hpp"
#include "qcf/tolerances.hpp"
#include "support/test_helpers.hpp"

using qcf::Complex;
using qcf::ComplexMatrix;

TEST_SUITE_BEGIN("quantum_objects");

TEST_CASE("validate_state accepts the canonical qubit states") {
  const auto mixed = qcf::validate_state(0.5 * ComplexMatrix::identity(2));
  CHECK(mixed.dim() == 2);
  CHECK(mixed.is_full_rank());
  CHECK_FALSE(mixed.is_pure());
  CHECK(mixed.min_eigenvalue() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(mixed.max_eigenvalue() == doctest::Approx(0.5).epsilon(1e-12));

  const auto pure = qcf::validate_state(qcf_test::basis_projector(2, 0));
  CHECK(pure.is_pure());
  CHECK_FALSE(pure.is_full_rank());
  CHECK(pure.max_eigenvalue() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("validate_state rejects malformed input") {
  // Trace 1.1.
  CHECK_THROWS_AS(qcf::validate_state(ComplexMatrix::from_rows({{0.6, 0.0}, {0.0, 0.5}})),
                  qcf::TraceError);
  // Non-Hermitian.
  CHECK_THROWS_AS(qcf::validate_state(ComplexMatrix::from_rows({{0.5, 0.3}, {0.0, 0.5}})),
                  qcf::HermiticityError);
  // Negative eigenvalue.
  CHECK_THROWS_AS(qcf::validate_state(ComplexMatrix::from_rows({{1.5, 0.0}, {0.0, -0.5}})),
                  qcf::NegativityError);
  // Not square.
  CHECK_THROWS_AS(qcf::validate_state(ComplexMatrix(1, 2)), qcf::DimensionError);
}

TEST_CASE("validation of an already-valid state matrix is idempotent") {
  const auto rho = qcf::random_state(3, 99, true);
  const auto again = qcf::validate_state(rho.matrix());
  CHECK(qcf::approx_eq(again.matrix(), rho.matrix(), 0.0).equal);
  CHECK(again.is_full_rank() == rho.is_full_rank());
  CHECK(again.is_pure() == rho.is_pure());
}

TEST_CASE("validate_povm accepts projective, trivial and overcomplete sets") {
  const auto z = qcf::validate_povm({qcf_test::basis_projector(2, 0), qcf_test::basis_projector(2, 1)});
  CHECK(z.dim() == 2);
  CHECK(z.n_outcomes() == 2);
  CHECK(z.label(0) == "a0");
  CHECK(z.label(1) == "a1");

  const auto trivial =
      qcf::validate_povm({0.5 * ComplexMatrix::identity(2), 0.5 * ComplexMatrix::identity(2)},
                         {"left", "right"});
  CHECK(trivial.label(0) == "left");

  // Trine: three rank-1 effects (2/3)|v_k><v_k| at 120-degree angles sum to I.
  std::vector<ComplexMatrix> trine;
  for (int k = 0; k < 3; ++k) {
    const double theta = 2.0 * M_PI * k / 3.0;
    const Complex v0{std::cos(theta), 0.0};
    const Complex v1{std::sin(theta), 0.0};
    ComplexMatrix e(2, 2);
    e(0, 0) = (2.0 / 3.0) * v0 * std::conj(v0);
    e(0, 1) = (2.0 / 3.0) * v0 * std::conj(v1);
    e(1, 0) = (2.0 / 3.0) * v1 * std::conj(v0);
    e(1, 1) = (2.0 / 3.0) * v1 * std::conj(v1);
    trine.push_back(e);
  }
  const auto overcomplete = qcf::validate_povm(std::move(trine), {}, "t");
  CHECK(overcomplete.n_outcomes() == 3);
  CHECK(overcomplete.label(2) == "t2");
}

TEST_CASE("validate_povm rejects malformed sets") {
  const ComplexMatrix p0 = qcf_test::basis_projector(2, 0);
  const ComplexMatrix p1 = qcf_test::basis_projector(2, 1);
  // Fewer than two outcomes.
  CHECK_THROWS_AS(qcf::validate_povm({ComplexMatrix::identity(2)}), qcf::CompletenessError);
  // Sums to diag(2, 0).
  CHECK_THROWS_AS(qcf::validate_povm({p0, p0}), qcf::CompletenessError);
  // Negative effect.
  CHECK_THROWS_AS(
      qcf::validate_povm({ComplexMatrix::from_rows({{2.0, 0.0}, {0.0, 1.0}}),
                          ComplexMatrix::from_rows({{-1.0, 0.0}, {0.0, 0.0}})}),
      qcf::NegativityError);
  // Mixed dimensions.
  CHECK_THROWS_AS(qcf::validate_povm({p0, ComplexMatrix::identity(3)}), qcf::DimensionError);
  // Label count disagrees with effect count.
  CHECK_THROWS_AS(qcf::validate_povm({p0, p1}, {"only-one"}), qcf::DimensionError);
}

TEST_CASE("povm labels and effects always agree in count") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto povm = qcf::random_povm(3, 2 + seed % 3, seed, "b");
    CHECK(povm.labels().size() == povm.n_outcomes());
    CHECK(povm.label(0) == "b0");
  }
}

TEST_CASE("validate_channel accepts identity, damping and rectangular channels") {
  const auto id = qcf::validate_channel({ComplexMatrix::identity(3)}, 3, 3);
  CHECK(id.n_kraus() == 1);
  CHECK(id.dim_in() == 3);
  CHECK(id.dim_out() == 3);

  // Amplitude damping at gamma = 1: K0 = |0><0|, K1 = |0><1|.
  ComplexMatrix k1(2, 2);
  k1(0, 1) = 1.0;
  const auto damp = qcf::validate_channel({qcf_test::basis_projector(2, 0), k1}, 2, 2);
  CHECK(damp.n_kraus() == 2);

  // Partial damping gamma = 0.3 stays trace preserving.
  ComplexMatrix d0(2, 2);
  d0(0, 0) = 1.0;
  d0(1, 1) = std::sqrt(0.7);
  ComplexMatrix d1(2, 2);
  d1(0, 1) = std::sqrt(0.3);
  CHECK_NOTHROW(qcf::validate_channel({d0, d1}, 2, 2));

  // 2 -> 3 isometry embedding.
  ComplexMatrix v(3, 2);
  v(0, 0) = 1.0;
  v(2, 1) = 1.0;
  const auto rect = qcf::validate_channel({v}, 2, 3);
  CHECK(rect.dim_out() == 3);
}

TEST_CASE("validate_channel rejects malformed kraus sets") {
  // Not trace preserving.
  CHECK_THROWS_AS(qcf::validate_channel({0.5 * ComplexMatrix::identity(2)}, 2, 2),
                  qcf::TracePreservationError);
  // Wrong block shape.
  CHECK_THROWS_AS(qcf::validate_channel({ComplexMatrix::identity(2)}, 2, 3),
                  qcf::DimensionError);
  // Empty list.
  CHECK_THROWS_AS(qcf::validate_channel({}, 2, 2), qcf::DimensionError);
}

TEST_CASE("validate_scenario enforces cross-field consistency") {
  const auto rho = qcf::validate_state(0.5 * ComplexMatrix::identity(2));
  const auto scenario = qcf_test::make_scenario(
      "ok", rho, qcf_test::identity_channel(2), qcf_test::z_basis_povm("a"),
      qcf_test::z_basis_povm("b"));
  CHECK_NOTHROW(qcf::validate_scenario(scenario));

  // A POVM on the wrong side.
  const auto povm3 = qcf::random_povm(3, 2, 5, "b");
  const auto bad =
      qcf_test::make_scenario("bad", rho, qcf_test::identity_channel(2),
                              qcf_test::z_basis_povm("a"), povm3);
  CHECK_THROWS_AS(qcf::validate_scenario(bad), qcf::DimensionError);

  // Pure rho requires the explicit fallback marker.
  const auto pure = qcf::validate_state(qcf_test::basis_projector(2, 0));
  const auto pure_scenario = qcf_test::make_scenario(
      "pure", pure, qcf_test::identity_channel(2), qcf_test::z_basis_povm("a"),
      qcf_test::z_basis_povm("b"));
  CHECK_THROWS_AS(qcf::validate_scenario(pure_scenario), qcf::RankError);

  const auto marked = qcf_test::make_scenario(
      "pure-marked", pure, qcf_test::identity_channel(2), qcf_test::z_basis_povm("a"),
      qcf_test::z_basis_povm("b"), std::nullopt, true);
  CHECK_NOTHROW(qcf::validate_scenario(marked));
}

TEST_CASE("frame names are stable identifiers") {
  CHECK(qcf::frame_name(qcf::CausalFrame::AlphaForward) == "alpha");
  CHECK(qcf::frame_name(qcf::CausalFrame::BetaReverse) == "beta");
  CHECK(qcf::frame_name(qcf::CausalFrame::GammaSpacelike) == "gamma");
}

TEST_SUITE_END();
