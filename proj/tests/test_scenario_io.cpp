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

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "qcf/scenario_io.hpp"
#include "qcf/verification.hpp"
#include "support/test_helpers.hpp"

using nlohmann::json;
using qcf::ComplexMatrix;

namespace {

void check_exact_matrix_equality(const ComplexMatrix& a, const ComplexMatrix& b) {
  REQUIRE(a.rows() == b.rows());
  REQUIRE(a.cols() == b.cols());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a.entries()[k] == b.entries()[k]);
  }
}

void check_exact_povm_equality(const qcf::Povm& a, const qcf::Povm& b) {
  REQUIRE(a.n_outcomes() == b.n_outcomes());
  CHECK(a.labels() == b.labels());
  for (std::size_t i = 0; i < a.n_outcomes(); ++i) {
    check_exact_matrix_equality(a.effect(i), b.effect(i));
  }
}

void check_exact_scenario_equality(const qcf::Scenario& a, const qcf::Scenario& b) {
  CHECK(a.name == b.name);
  CHECK(a.dims == b.dims);
  CHECK(a.pure_fallback == b.pure_fallback);
  check_exact_matrix_equality(a.rho.matrix(), b.rho.matrix());
  REQUIRE(a.channel.n_kraus() == b.channel.n_kraus());
  for (std::size_t m = 0; m < a.channel.n_kraus(); ++m) {
    check_exact_matrix_equality(a.channel.kraus_op(m), b.channel.kraus_op(m));
  }
  check_exact_povm_equality(a.povm_a, b.povm_a);
  check_exact_povm_equality(a.povm_b, b.povm_b);
  REQUIRE(a.povm_a_alt.has_value() == b.povm_a_alt.has_value());
  if (a.povm_a_alt) {
    check_exact_povm_equality(*a.povm_a_alt, *b.povm_a_alt);
  }
}

// Minimal well-formed scenario document the error tests mutate.
json base_document() {
  return json::parse(qcf::io::serialize_scenario(qcf::io::preset("stern-gerlach")));
}

void expect_parse_error_mentioning(const json& doc, const std::string& needle) {
  try {
    qcf::io::parse_scenario(doc.dump());
    FAIL_CHECK("expected a parse/validation error mentioning '" << needle << "'");
  } catch (const qcf::Error& e) {
    const std::string what = e.what();
    INFO("message: " << what);
    CHECK(what.find(needle) != std::string::npos);
  }
}

}  // namespace

TEST_SUITE_BEGIN("scenario_io");

TEST_CASE("preset names are stable and all presets validate") {
  const auto names = qcf::io::preset_names();
  REQUIRE(names.size() == 3);
  CHECK(std::find(names.begin(), names.end(), "stern-gerlach") != names.end());
  CHECK(std::find(names.begin(), names.end(), "depolarizing") != names.end());
  CHECK(std::find(names.begin(), names.end(), "bell") != names.end());
  for (const auto& name : names) {
    const auto sc = qcf::io::preset(name);
    CHECK_NOTHROW(qcf::validate_scenario(sc));
    CHECK(sc.name == name);
  }
  CHECK_THROWS_AS(qcf::io::preset("nope"), qcf::UnknownPresetError);
}

TEST_CASE("the stern-gerlach preset is the qubit z/z identity scenario") {
  const auto sc = qcf::io::preset("stern-gerlach");
  CHECK(sc.dims == qcf::BipartiteDims(2, 2));
  check_exact_matrix_equality(sc.rho.matrix(), 0.5 * ComplexMatrix::identity(2));
  CHECK(sc.channel.n_kraus() == 1);
  check_exact_matrix_equality(sc.channel.kraus_op(0), ComplexMatrix::identity(2));
  check_exact_matrix_equality(sc.povm_a.effect(0), qcf_test::basis_projector(2, 0));
  check_exact_matrix_equality(sc.povm_a.effect(1), qcf_test::basis_projector(2, 1));
  CHECK_FALSE(sc.povm_a_alt.has_value());
  CHECK(sc.povm_a.label(0) == "Z1↑");
  CHECK(sc.povm_b.label(1) == "Z2↓");
}

TEST_CASE("the bell preset carries an x-basis alternative on the first system") {
  const auto sc = qcf::io::preset("bell");
  REQUIRE(sc.povm_a_alt.has_value());
  CHECK(sc.povm_a_alt->n_outcomes() == 2);
  // Both X projectors have 1/2 on every entry, up to sign.
  const auto& plus = sc.povm_a_alt->effect(0);
  CHECK(std::abs(plus(0, 0).real() - 0.5) < 1e-15);
  CHECK(std::abs(plus(0, 1).real() - 0.5) < 1e-15);
}

TEST_CASE("serialization round-trips presets exactly") {
  for (const auto& name : qcf::io::preset_names()) {
    const auto original = qcf::io::preset(name);
    const auto reparsed = qcf::io::parse_scenario(qcf::io::serialize_scenario(original));
    check_exact_scenario_equality(original, reparsed);
  }
}

TEST_CASE("serialization round-trips random scenarios exactly") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto original = qcf_test::random_scenario(qcf::derive_seed(51, seed));
    const auto reparsed = qcf::io::parse_scenario(qcf::io::serialize_scenario(original));
    check_exact_scenario_equality(original, reparsed);
  }
}

TEST_CASE("parse errors carry the offending field path") {
  // Not JSON at all.
  CHECK_THROWS_AS(qcf::io::parse_scenario("not json {"), qcf::ParseError);

  json doc = base_document();
  doc.erase("rho");
  expect_parse_error_mentioning(doc, "rho");

  doc = base_document();
  doc["rho"][0][0] = {0.6, 0.0};
  doc["rho"][1][1] = {0.5, 0.0};
  try {
    qcf::io::parse_scenario(doc.dump());
    FAIL_CHECK("trace-1.1 state must be rejected");
  } catch (const qcf::TraceError& e) {
    CHECK(std::string(e.what()).find("rho") != std::string::npos);
  }

  // Complex entries must be [re, im] pairs.
  doc = base_document();
  doc["rho"][0][0] = {0.5, 0.0, 0.0};
  expect_parse_error_mentioning(doc, "rho[0][0]");

  // Ragged matrix row.
  doc = base_document();
  doc["rho"][1] = json::array({json::array({0.0, 0.0})});
  expect_parse_error_mentioning(doc, "rho[1]");

  // Shape disagrees with the declared dimension.
  doc = base_document();
  doc["d1"] = 3;
  doc["d2"] = 3;
  expect_parse_error_mentioning(doc, "rho");

  // Kraus blocks that do not preserve trace.
  doc = base_document();
  doc["kraus"][0][0][0] = {0.5, 0.0};
  doc["kraus"][0][1][1] = {0.5, 0.0};
  try {
    qcf::io::parse_scenario(doc.dump());
    FAIL_CHECK("non-trace-preserving kraus set must be rejected");
  } catch (const qcf::TracePreservationError& e) {
    CHECK(std::string(e.what()).find("kraus") != std::string::npos);
  }

  // POVM that does not sum to identity.
  doc = base_document();
  doc["povm_a"]["effects"][0] = doc["povm_a"]["effects"][1];
  try {
    qcf::io::parse_scenario(doc.dump());
    FAIL_CHECK("incomplete povm must be rejected");
  } catch (const qcf::CompletenessError& e) {
    CHECK(std::string(e.what()).find("povm_a") != std::string::npos);
  }

  // Dimensions below 2 are rejected while parsing.
  doc = base_document();
  doc["d1"] = 1;
  CHECK_THROWS_AS(qcf::io::parse_scenario(doc.dump()), qcf::DimensionError);

  // Wrong label container type.
  doc = base_document();
  doc["povm_a"]["labels"] = "not-a-list";
  expect_parse_error_mentioning(doc, "labels");
}

TEST_CASE("povms parse from both the bare-array and object spellings") {
  json doc = base_document();
  // Rewrite povm_b as a bare array of effects.
  json bare = json::array();
  bare.push_back(doc["povm_b"]["effects"][0]);
  bare.push_back(doc["povm_b"]["effects"][1]);
  doc["povm_b"] = bare;
  const auto sc = qcf::io::parse_scenario(doc.dump());
  CHECK(sc.povm_b.n_outcomes() == 2);
  // Default labels replace the named ones.
  CHECK(sc.povm_b.label(0) == "b0");
}

TEST_CASE("optional fields parse when present") {
  json doc = base_document();
  doc["povm_a_alt"] = doc["povm_a"];
  doc["pure_fallback"] = false;
  const auto sc = qcf::io::parse_scenario(doc.dump());
  CHECK(sc.povm_a_alt.has_value());
  CHECK_FALSE(sc.pure_fallback);
}

TEST_CASE("file loading reports missing paths") {
  CHECK_THROWS_AS(qcf::io::load_scenario_file("/nonexistent/qcf-test.json"), qcf::ParseError);
}

TEST_CASE("frame report json carries the schema and full-precision deviations") {
  const auto report = qcf::verify_frame_equality(qcf::io::preset("stern-gerlach"));
  const json j = json::parse(qcf::io::frame_report_json(report));
  CHECK(j.at("version") == qcf::io::kVersion);
  CHECK(j.at("kind") == "frames");
  CHECK(j.at("scenario") == "stern-gerlach");
  CHECK(j.at("pass").get<bool>());
  const auto& dev = j.at("deviations");
  CHECK(dev.at("alpha_beta").get<double>() == report.dev_alpha_beta);
  CHECK(dev.at("alpha_gamma").get<double>() == report.dev_alpha_gamma);
  CHECK(dev.at("beta_gamma").get<double>() == report.dev_beta_gamma);
  CHECK(dev.at("choi").get<double>() == report.choi_deviation);
  CHECK(dev.at("star_acausal").get<double>() == report.star_acausal_deviation);
  CHECK(dev.at("star_causal").get<double>() == report.star_causal_deviation);
  const auto& tols = j.at("tolerances");
  CHECK(tols.at("frame").get<double>() == report.tolerances.frame);
  CHECK(tols.at("choi").get<double>() == report.tolerances.choi);
  CHECK(tols.at("star").get<double>() == report.tolerances.star);
  const auto& dists = j.at("distributions");
  REQUIRE(dists.at("alpha").size() == 2);
  CHECK(dists.at("alpha")[0].size() == 2);
  CHECK(dists.at("alpha")[0][0].get<double>() == report.alpha(0, 0));
  CHECK(j.at("labels_a").size() == 2);
  CHECK(j.at("wall_seconds").is_number());
}

TEST_CASE("no-signalling and batch reports serialize with their schemas") {
  const auto ns = qcf::verify_no_signalling(qcf::io::preset("bell"));
  const json jn = json::parse(qcf::io::nosignal_report_json(ns));
  CHECK(jn.at("kind") == "nosignal");
  CHECK(jn.at("pass").get<bool>());
  CHECK(jn.at("max_deviation").get<double>() == ns.max_deviation);

  qcf::BatchConfig config;
  config.n_trials = 10;
  const auto batch = qcf::batch_verify(config);
  const json jb = json::parse(qcf::io::batch_report_json(batch, config));
  CHECK(jb.at("kind") == "random-batch");
  CHECK(jb.at("n_pass").get<std::size_t>() == batch.n_pass);
  CHECK(jb.at("worst").at("frame_deviation").get<double>() == batch.worst_frame_deviation);
  CHECK(jb.at("worst").at("seed").get<std::uint64_t>() == batch.worst_seed);
  CHECK(jb.at("config").at("n_trials").get<std::size_t>() == 10);
}

TEST_CASE("human tables render probabilities and verdicts") {
  const auto report = qcf::verify_frame_equality(qcf::io::preset("stern-gerlach"));
  const std::string table = qcf::io::render_frame_table(report);
  CHECK(table.find("0.500000") != std::string::npos);
  CHECK(table.find("alpha") != std::string::npos);
  CHECK(table.find("PASS") != std::string::npos);

  const auto ns = qcf::verify_no_signalling(qcf::io::preset("bell"));
  const std::string ns_table = qcf::io::render_nosignal_table(ns);
  CHECK(ns_table.find("PASS") != std::string::npos);

  qcf::BatchConfig config;
  config.n_trials = 5;
  const std::string batch_table = qcf::io::render_batch_summary(qcf::batch_verify(config));
  CHECK(batch_table.find("5") != std::string::npos);
  CHECK(batch_table.find("PASS") != std::string::npos);
}

TEST_SUITE_END();
