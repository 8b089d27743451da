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
//
// Command-line front end. Exit codes: 0 every requested check passed,
// 1 a verification check exceeded its tolerance, 2 input/parse/validation
// error (diagnostic on stderr).

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qcf/errors.hpp"
#include "qcf/scenario_io.hpp"
#include "qcf/tolerances.hpp"
#include "qcf/verification.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

// Scenario arguments accept either a file path or "preset:<name>".
qcf::Scenario load_scenario_arg(const std::string& arg) {
  constexpr std::string_view prefix = "preset:";
  if (arg.rfind(prefix, 0) == 0) {
    return qcf::io::preset(arg.substr(prefix.size()));
  }
  return qcf::io::load_scenario_file(arg);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) {
    throw qcf::ParseError("cannot write file: " + path);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks that observers assuming different causal structures for a "
               "two-device quantum experiment compute identical outcome statistics."};
  app.require_subcommand(1);

  std::string scenario_arg;
  std::string json_path;
  std::string emit_path;
  std::string preset_name;
  double frame_tol = qcf::tol::kFrameEquality;
  double nosignal_tol = qcf::tol::kNoSignalling;
  std::size_t d1 = 0;
  std::size_t d2 = 0;
  std::size_t n_kraus = 0;
  std::size_t n_trials = 100;
  std::uint64_t seed = 0;

  CLI::App* validate = app.add_subcommand("validate", "Parse and validate a scenario file");
  validate->add_option("file", scenario_arg, "Scenario file or preset:<name>")->required();

  CLI::App* frames = app.add_subcommand(
      "frames", "Compare the three causal frames' joint distributions on one scenario");
  frames->add_option("file", scenario_arg, "Scenario file or preset:<name>")->required();
  frames->add_option("--tol", frame_tol, "Frame-equality tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  frames->add_option("--json", json_path, "Write a machine-readable report to this path");

  CLI::App* nosignal = app.add_subcommand(
      "nosignal", "Check that B's marginals ignore which A measurement was chosen");
  nosignal->add_option("file", scenario_arg, "Scenario file or preset:<name>")->required();
  nosignal->add_option("--tol", nosignal_tol, "Marginal-deviation tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CLI::App* random = app.add_subcommand(
      "random", "Sweep random scenarios; omit --d1/--d2/--kraus to sample the full grid");
  random->add_option("--d1", d1, "System-1 dimension (default: sample from {2,3,4})")
      ->check(CLI::Range(std::size_t{2}, std::size_t{16}));
  random->add_option("--d2", d2, "System-2 dimension (default: sample from {2,3,4})")
      ->check(CLI::Range(std::size_t{2}, std::size_t{16}));
  random->add_option("--kraus", n_kraus, "Kraus count (default: sample from {1,2,4})")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  random->add_option("--trials", n_trials, "Number of scenarios")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  random->add_option("--seed", seed, "Base seed")->capture_default_str();
  random->add_option("--tol", frame_tol, "Frame-equality tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  random->add_option("--json", json_path, "Write a machine-readable report to this path");

  CLI::App* preset = app.add_subcommand("preset", "Write a built-in scenario file");
  preset->add_option("name", preset_name, "One of: stern-gerlach, depolarizing, bell")
      ->required();
  preset->add_option("--emit", emit_path, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (validate->parsed()) {
      const qcf::Scenario s = load_scenario_arg(scenario_arg);
      std::cout << "scenario \"" << s.name << "\" is valid (d1=" << s.dims.d1
                << ", d2=" << s.dims.d2 << ", kraus=" << s.channel.n_kraus()
                << ", |A|=" << s.povm_a.n_outcomes() << ", |B|=" << s.povm_b.n_outcomes()
                << (s.povm_a_alt ? ", with alternative A measurement" : "") << ")\n";
      return kExitPass;
    }

    if (frames->parsed()) {
      const qcf::Scenario s = load_scenario_arg(scenario_arg);
      qcf::FrameTolerances tols;
      tols.frame = frame_tol;
      const qcf::FrameReport report = qcf::verify_frame_equality(s, tols);
      std::cout << qcf::io::render_frame_table(report);
      if (!json_path.empty()) {
        write_file(json_path, qcf::io::frame_report_json(report));
      }
      return report.pass ? kExitPass : kExitCheckFailed;
    }

    if (nosignal->parsed()) {
      const qcf::Scenario s = load_scenario_arg(scenario_arg);
      const qcf::NoSignallingReport report = qcf::verify_no_signalling(s, nosignal_tol);
      std::cout << qcf::io::render_nosignal_table(report);
      return report.pass ? kExitPass : kExitCheckFailed;
    }

    if (random->parsed()) {
      qcf::BatchConfig config;
      if (d1 != 0) config.d1_choices = {d1};
      if (d2 != 0) config.d2_choices = {d2};
      if (n_kraus != 0) config.kraus_choices = {n_kraus};
      config.n_trials = n_trials;
      config.base_seed = seed;
      config.tolerances.frame = frame_tol;
      const qcf::BatchReport report = qcf::batch_verify(config);
      std::cout << qcf::io::render_batch_summary(report);
      if (!json_path.empty()) {
        write_file(json_path, qcf::io::batch_report_json(report, config));
      }
      return (report.n_fail == 0 && report.n_error == 0) ? kExitPass : kExitCheckFailed;
    }

    if (preset->parsed()) {
      const std::string text = qcf::io::serialize_scenario(qcf::io::preset(preset_name));
      if (emit_path.empty()) {
        std::cout << text;
      } else {
        write_file(emit_path, text);
        std::cout << "wrote preset \"" << preset_name << "\" to " << emit_path << "\n";
      }
      return kExitPass;
    }
  } catch (const qcf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;  // unreachable: require_subcommand guarantees a branch
}
