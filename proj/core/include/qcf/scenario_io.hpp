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

#include <string>
#include <vector>

#include "qcf/quantum_objects.hpp"
#include "qcf/verification.hpp"

namespace qcf::io {

inline constexpr const char* kVersion = "0.1.0";

/// Parses a scenario document (JSON). Matrices are arrays of rows, complex
/// entries are [re, im] number pairs; d1/d2 are stated explicitly and
/// cross-checked against every operator's shape. Measurements may be given
/// as a bare list of effect matrices or as {"effects": [...], "labels":
/// [...]}. Parse and validation errors carry the offending field path.
Scenario parse_scenario(const std::string& text);

/// Inverse of parse_scenario: parse(serialize(s)) reproduces s exactly
/// (doubles are rendered with round-trip precision).
std::string serialize_scenario(const Scenario& scenario);

/// Reads and parses a scenario file from disk (ParseError when unreadable).
Scenario load_scenario_file(const std::string& path);

/// Built-in demonstration scenarios:
///   stern-gerlach — maximally mixed qubit, identity channel, Z measurements
///                   on both ends; every frame yields [[1/2,0],[0,1/2]].
///   depolarizing  — same, but the channel erases the state; every frame
///                   yields the uniform [[1/4,1/4],[1/4,1/4]].
///   bell          — stern-gerlach plus an X-basis alternative for device A,
///                   for marginal-independence demonstrations.
Scenario preset(const std::string& name);
std::vector<std::string> preset_names();

/// Machine-readable reports: JSON documents carrying every deviation at full
/// precision plus the tool version. Schema is stable across runs.
std::string frame_report_json(const FrameReport& report);
std::string nosignal_report_json(const NoSignallingReport& report);
std::string batch_report_json(const BatchReport& report, const BatchConfig& config);

/// Human-readable renderings: probabilities to 6 decimal places, deviations
/// in scientific notation with 3 significant digits.
std::string render_frame_table(const FrameReport& report);
std::string render_nosignal_table(const NoSignallingReport& report);
std::string render_batch_summary(const BatchReport& report);

}  // namespace qcf::io
