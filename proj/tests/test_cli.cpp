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

#include <cstdio>
#include <fstream>
#include <string>
#include <unistd.h>

#include "qcf/scenario_io.hpp"
#include "support/test_helpers.hpp"

#ifndef QCF_CLI_PATH
#error "QCF_CLI_PATH must point at the qcf binary"
#endif

using nlohmann::json;

namespace {

const std::string kCli = QCF_CLI_PATH;

std::string temp_path(const std::string& stem) {
  return "/tmp/qcf-cli-test-" + std::to_string(::getpid()) + "-" + stem;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return text;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("frames on the stern-gerlach preset exits zero with the expected table") {
  const auto res = qcf_test::run_command(kCli + " frames preset:stern-gerlach");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("0.500000") != std::string::npos);
  CHECK(res.output.find("alpha") != std::string::npos);
  CHECK(res.output.find("beta") != std::string::npos);
  CHECK(res.output.find("gamma") != std::string::npos);
  CHECK(res.output.find("PASS") != std::string::npos);
}

TEST_CASE("random batch run exits zero and reports a tiny worst deviation") {
  const auto res = qcf_test::run_command(
      kCli + " random --d1 3 --d2 2 --kraus 2 --trials 100 --seed 7");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("pass: 100") != std::string::npos);
  CHECK(res.output.find("result: PASS") != std::string::npos);
}

TEST_CASE("validate rejects a non-psd state with exit code two") {
  const std::string path = temp_path("broken.json");
  json doc = json::parse(qcf::io::serialize_scenario(qcf::io::preset("stern-gerlach")));
  doc["rho"][0][0] = {1.5, 0.0};
  doc["rho"][1][1] = {-0.5, 0.0};
  write_text(path, doc.dump());
  const auto res = qcf_test::run_command(kCli + " validate " + path);
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("error") != std::string::npos);
  CHECK(res.output.find("rho") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("validate accepts every preset") {
  for (const std::string name : {"stern-gerlach", "depolarizing", "bell"}) {
    const auto res = qcf_test::run_command(kCli + " validate preset:" + name);
    CHECK(res.exit_code == 0);
  }
}

TEST_CASE("an unreachable tolerance turns the exit code into one") {
  const auto res = qcf_test::run_command(kCli + " random --trials 5 --seed 3 --tol 1e-30");
  CHECK(res.exit_code == 1);
  CHECK(res.output.find("FAIL") != std::string::npos);
}

TEST_CASE("missing files and bad arguments map to exit code two") {
  CHECK(qcf_test::run_command(kCli + " validate /nonexistent/nope.json").exit_code == 2);
  CHECK(qcf_test::run_command(kCli + " frames preset:not-a-preset").exit_code == 2);
  CHECK(qcf_test::run_command(kCli + " nosignal preset:stern-gerlach").exit_code == 2);
  CHECK(qcf_test::run_command(kCli + " definitely-not-a-subcommand").exit_code == 2);
}

TEST_CASE("nosignal on the bell preset passes") {
  const auto res = qcf_test::run_command(kCli + " nosignal preset:bell");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("PASS") != std::string::npos);
}

TEST_CASE("json report files parse and mirror the verification outcome") {
  const std::string path = temp_path("frames.json");
  const auto res =
      qcf_test::run_command(kCli + " frames preset:stern-gerlach --json " + path);
  REQUIRE(res.exit_code == 0);
  const json report = json::parse(read_text(path));
  CHECK(report.at("kind") == "frames");
  CHECK(report.at("pass").get<bool>());
  for (const char* key :
       {"alpha_beta", "alpha_gamma", "beta_gamma", "choi", "star_acausal", "star_causal"}) {
    const double dev = report.at("deviations").at(key).get<double>();
    CHECK(dev >= 0.0);
    CHECK(dev < 1e-10);
  }
  std::remove(path.c_str());

  const std::string batch_path = temp_path("batch.json");
  const auto batch_res = qcf_test::run_command(
      kCli + " random --trials 20 --seed 11 --json " + batch_path);
  REQUIRE(batch_res.exit_code == 0);
  const json batch = json::parse(read_text(batch_path));
  CHECK(batch.at("kind") == "random-batch");
  CHECK(batch.at("n_pass").get<int>() == 20);
  CHECK(batch.at("worst").at("frame_deviation").get<double>() < 1e-10);
  std::remove(batch_path.c_str());
}

TEST_CASE("preset subcommand emits a parseable scenario file") {
  const std::string path = temp_path("preset.json");
  const auto res = qcf_test::run_command(kCli + " preset bell --emit " + path);
  REQUIRE(res.exit_code == 0);
  const auto sc = qcf::io::load_scenario_file(path);
  CHECK(sc.name == "bell");
  CHECK(sc.povm_a_alt.has_value());
  std::remove(path.c_str());

  // Without --emit the document goes to stdout.
  const auto out = qcf_test::run_command(kCli + " preset stern-gerlach", false);
  CHECK(out.exit_code == 0);
  const auto parsed = qcf::io::parse_scenario(out.output);
  CHECK(parsed.name == "stern-gerlach");

  CHECK(qcf_test::run_command(kCli + " preset nope").exit_code == 2);
}

TEST_SUITE_END();
