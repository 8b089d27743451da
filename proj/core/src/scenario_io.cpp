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

#include "qcf/scenario_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "qcf/errors.hpp"

namespace qcf::io {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Located error propagation: validators speak in operator terms; IO prefixes
// the document field they were fed from, preserving the error type.

std::string locate(const std::string& path, const std::exception& e) {
  return path + ": " + e.what();
}

template <typename Fn>
auto at_field(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw;  // already located
  } catch (const DimensionError& e) {
    throw DimensionError(locate(path, e));
  } catch (const HermiticityError& e) {
    throw HermiticityError(locate(path, e));
  } catch (const NegativityError& e) {
    throw NegativityError(locate(path, e));
  } catch (const TraceError& e) {
    throw TraceError(locate(path, e));
  } catch (const CompletenessError& e) {
    throw CompletenessError(locate(path, e));
  } catch (const TracePreservationError& e) {
    throw TracePreservationError(locate(path, e));
  } catch (const RankError& e) {
    throw RankError(locate(path, e));
  } catch (const Error& e) {
    throw ParseError(locate(path, e));
  }
}

// ---------------------------------------------------------------------------
// JSON -> domain objects

const json& require_field(const json& j, const char* key, const std::string& parent = {}) {
  const std::string path = parent.empty() ? std::string(key) : parent + "." + key;
  if (!j.is_object()) {
    throw ParseError(path + ": enclosing document is not an object");
  }
  const auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(path + ": missing required field");
  }
  return *it;
}

std::size_t parse_dimension(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw ParseError(path + ": expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

std::string parse_name(const json& j, const std::string& path) {
  if (!j.is_string()) {
    throw ParseError(path + ": expected a string");
  }
  return j.get<std::string>();
}

Complex parse_complex(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(path + ": expected an [re, im] number pair");
  }
  return Complex{j[0].get<double>(), j[1].get<double>()};
}

ComplexMatrix parse_matrix(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) {
    throw ParseError(path + ": expected a non-empty array of rows");
  }
  if (!j[0].is_array() || j[0].empty()) {
    throw ParseError(path + "[0]: expected a non-empty row array");
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  ComplexMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols) {
      throw ParseError(path + "[" + std::to_string(r) + "]: expected a row of " +
                       std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      out(r, c) =
          parse_complex(row[c], path + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
  }
  return out;
}

void check_shape(const ComplexMatrix& m, std::size_t rows, std::size_t cols,
                 const std::string& path, const char* derivation) {
  if (m.rows() != rows || m.cols() != cols) {
    throw DimensionError(path + ": expected " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " (" + derivation + "), got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

Povm parse_povm(const json& j, const std::string& path, std::size_t dim,
                const std::string& auto_prefix) {
  const json* effects_json = &j;
  std::vector<std::string> labels;
  if (j.is_object()) {
    effects_json = &require_field(j, "effects", path);
    if (j.contains("labels")) {
      const json& labels_json = j.at("labels");
      if (!labels_json.is_array()) {
        throw ParseError(path + ".labels: expected an array of strings");
      }
      for (std::size_t i = 0; i < labels_json.size(); ++i) {
        labels.push_back(
            parse_name(labels_json[i], path + ".labels[" + std::to_string(i) + "]"));
      }
    }
  }
  if (!effects_json->is_array()) {
    throw ParseError(path + ": expected a list of effect matrices or an object with "
                            "\"effects\"");
  }
  const std::string effects_path = j.is_object() ? path + ".effects" : path;
  std::vector<ComplexMatrix> effects;
  effects.reserve(effects_json->size());
  for (std::size_t i = 0; i < effects_json->size(); ++i) {
    const std::string entry_path = effects_path + "[" + std::to_string(i) + "]";
    ComplexMatrix effect = parse_matrix((*effects_json)[i], entry_path);
    check_shape(effect, dim, dim, entry_path, "device dimension");
    effects.push_back(std::move(effect));
  }
  return at_field(path,
                  [&] { return validate_povm(std::move(effects), std::move(labels), auto_prefix); });
}

// ---------------------------------------------------------------------------
// Domain objects -> JSON

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back(complex_to_json(m(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json povm_to_json(const Povm& povm) {
  json effects = json::array();
  for (std::size_t i = 0; i < povm.n_outcomes(); ++i) {
    effects.push_back(matrix_to_json(povm.effect(i)));
  }
  return json{{"effects", std::move(effects)}, {"labels", povm.labels()}};
}

json distribution_to_json(const JointDistribution& dist) {
  json rows = json::array();
  for (std::size_t i = 0; i < dist.n_a(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < dist.n_b(); ++j) {
      row.push_back(dist(i, j));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Formatting helpers

std::string fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string sci3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::string pad_to(std::string s, std::size_t width) {
  while (s.size() < width) s.push_back(' ');
  return s;
}

std::string verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

// ---------------------------------------------------------------------------
// Presets

ComplexMatrix basis_projector(std::size_t dim, std::size_t k) {
  ComplexMatrix p(dim, dim);
  p(k, k) = Complex{1.0, 0.0};
  return p;
}

Scenario make_z_basis_scenario(const std::string& name, std::vector<ComplexMatrix> kraus) {
  ComplexMatrix half_identity = ComplexMatrix::identity(2);
  half_identity = scale(half_identity, Complex{0.5, 0.0});

  DensityMatrix rho = validate_state(half_identity);
  KrausChannel channel = validate_channel(std::move(kraus), 2, 2);
  Povm povm_a = validate_povm({basis_projector(2, 0), basis_projector(2, 1)},
                              {"Z1↑", "Z1↓"});
  Povm povm_b = validate_povm({basis_projector(2, 0), basis_projector(2, 1)},
                              {"Z2↑", "Z2↓"});
  return Scenario{name,
                  BipartiteDims{2, 2},
                  std::move(rho),
                  std::move(channel),
                  std::move(povm_a),
                  std::move(povm_b),
                  std::nullopt,
                  /*pure_fallback=*/false};
}

Scenario make_stern_gerlach() {
  return make_z_basis_scenario("stern-gerlach", {ComplexMatrix::identity(2)});
}

Scenario make_depolarizing() {
  // Kraus set {|a><b| / sqrt(2)}: sends every state to I/2.
  std::vector<ComplexMatrix> kraus;
  const double amp = 1.0 / std::sqrt(2.0);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      ComplexMatrix k(2, 2);
      k(a, b) = Complex{amp, 0.0};
      kraus.push_back(std::move(k));
    }
  }
  return make_z_basis_scenario("depolarizing", std::move(kraus));
}

Scenario make_bell() {
  Scenario scenario = make_z_basis_scenario("bell", {ComplexMatrix::identity(2)});
  const Complex h{0.5, 0.0};
  const ComplexMatrix x_plus(2, 2, {h, h, h, h});
  const ComplexMatrix x_minus(2, 2, {h, -h, -h, h});
  scenario.povm_a_alt = validate_povm({x_plus, x_minus}, {"X1+", "X1-"});
  return scenario;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("document: not valid JSON (") + e.what() + ")");
  }
  if (!doc.is_object()) {
    throw ParseError("document: top level must be an object");
  }

  const std::string name = parse_name(require_field(doc, "name"), "name");
  const std::size_t d1 = parse_dimension(require_field(doc, "d1"), "d1");
  const std::size_t d2 = parse_dimension(require_field(doc, "d2"), "d2");
  const BipartiteDims dims = at_field("d1/d2", [&] { return BipartiteDims{d1, d2}; });

  ComplexMatrix rho_mat = parse_matrix(require_field(doc, "rho"), "rho");
  check_shape(rho_mat, d1, d1, "rho", "from d1");
  DensityMatrix rho = at_field("rho", [&] { return validate_state(rho_mat); });

  const json& kraus_json = require_field(doc, "kraus");
  if (!kraus_json.is_array() || kraus_json.empty()) {
    throw ParseError("kraus: expected a non-empty array of matrices");
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(kraus_json.size());
  for (std::size_t m = 0; m < kraus_json.size(); ++m) {
    const std::string entry_path = "kraus[" + std::to_string(m) + "]";
    ComplexMatrix k = parse_matrix(kraus_json[m], entry_path);
    check_shape(k, d2, d1, entry_path, "from d2 x d1");
    kraus.push_back(std::move(k));
  }
  KrausChannel channel =
      at_field("kraus", [&] { return validate_channel(std::move(kraus), d1, d2); });

  Povm povm_a = parse_povm(require_field(doc, "povm_a"), "povm_a", d1, "a");
  Povm povm_b = parse_povm(require_field(doc, "povm_b"), "povm_b", d2, "b");
  std::optional<Povm> povm_a_alt;
  if (doc.contains("povm_a_alt")) {
    povm_a_alt = parse_povm(doc.at("povm_a_alt"), "povm_a_alt", d1, "a'");
  }

  bool pure_fallback = false;
  if (doc.contains("pure_fallback")) {
    const json& flag = doc.at("pure_fallback");
    if (!flag.is_boolean()) {
      throw ParseError("pure_fallback: expected a boolean");
    }
    pure_fallback = flag.get<bool>();
  }

  Scenario scenario{name,
                    dims,
                    std::move(rho),
                    std::move(channel),
                    std::move(povm_a),
                    std::move(povm_b),
                    std::move(povm_a_alt),
                    pure_fallback};
  at_field("scenario", [&] { validate_scenario(scenario); });
  return scenario;
}

std::string serialize_scenario(const Scenario& scenario) {
  json doc;
  doc["name"] = scenario.name;
  doc["d1"] = scenario.dims.d1;
  doc["d2"] = scenario.dims.d2;
  doc["rho"] = matrix_to_json(scenario.rho.matrix());
  json kraus = json::array();
  for (std::size_t m = 0; m < scenario.channel.n_kraus(); ++m) {
    kraus.push_back(matrix_to_json(scenario.channel.kraus_op(m)));
  }
  doc["kraus"] = std::move(kraus);
  doc["povm_a"] = povm_to_json(scenario.povm_a);
  doc["povm_b"] = povm_to_json(scenario.povm_b);
  if (scenario.povm_a_alt.has_value()) {
    doc["povm_a_alt"] = povm_to_json(*scenario.povm_a_alt);
  }
  doc["pure_fallback"] = scenario.pure_fallback;
  return doc.dump(2) + "\n";
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open scenario file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

Scenario preset(const std::string& name) {
  if (name == "stern-gerlach") return make_stern_gerlach();
  if (name == "depolarizing") return make_depolarizing();
  if (name == "bell") return make_bell();
  std::string known;
  for (const std::string& n : preset_names()) {
    if (!known.empty()) known += ", ";
    known += n;
  }
  throw UnknownPresetError("unknown preset \"" + name + "\"; available: " + known);
}

std::vector<std::string> preset_names() { return {"stern-gerlach", "depolarizing", "bell"}; }

std::string frame_report_json(const FrameReport& report) {
  json doc;
  doc["version"] = kVersion;
  doc["kind"] = "frames";
  doc["scenario"] = report.scenario_name;
  doc["labels_a"] = report.alpha.labels_a();
  doc["labels_b"] = report.alpha.labels_b();
  doc["distributions"] = {{"alpha", distribution_to_json(report.alpha)},
                          {"beta", distribution_to_json(report.beta)},
                          {"gamma", distribution_to_json(report.gamma)}};
  doc["deviations"] = {{"alpha_beta", report.dev_alpha_beta},
                       {"alpha_gamma", report.dev_alpha_gamma},
                       {"beta_gamma", report.dev_beta_gamma},
                       {"choi", report.choi_deviation},
                       {"star_acausal", report.star_acausal_deviation},
                       {"star_causal", report.star_causal_deviation}};
  doc["tolerances"] = {{"frame", report.tolerances.frame},
                       {"choi", report.tolerances.choi},
                       {"star", report.tolerances.star}};
  doc["pass"] = report.pass;
  doc["wall_seconds"] = report.wall_seconds;
  return doc.dump(2) + "\n";
}

std::string nosignal_report_json(const NoSignallingReport& report) {
  json doc;
  doc["version"] = kVersion;
  doc["kind"] = "nosignal";
  doc["scenario"] = report.scenario_name;
  doc["marginal_under_a"] = report.marginal_under_a;
  doc["marginal_under_alt"] = report.marginal_under_alt;
  doc["analytic_marginal"] = report.analytic_marginal;
  doc["max_deviation"] = report.max_deviation;
  doc["tolerance"] = report.tolerance;
  doc["pass"] = report.pass;
  return doc.dump(2) + "\n";
}

std::string batch_report_json(const BatchReport& report, const BatchConfig& config) {
  json doc;
  doc["version"] = kVersion;
  doc["kind"] = "random-batch";
  doc["config"] = {{"d1_choices", config.d1_choices},
                   {"d2_choices", config.d2_choices},
                   {"kraus_choices", config.kraus_choices},
                   {"outcome_choices", config.outcome_choices},
                   {"n_trials", config.n_trials},
                   {"base_seed", config.base_seed},
                   {"tolerances",
                    {{"frame", config.tolerances.frame},
                     {"choi", config.tolerances.choi},
                     {"star", config.tolerances.star}}}};
  doc["n_pass"] = report.n_pass;
  doc["n_fail"] = report.n_fail;
  doc["n_error"] = report.n_error;
  doc["worst"] = {{"frame_deviation", report.worst_frame_deviation},
                  {"choi_deviation", report.worst_choi_deviation},
                  {"star_deviation", report.worst_star_deviation},
                  {"seed", report.worst_seed},
                  {"trial_index", report.worst_trial_index}};
  doc["total_seconds"] = report.total_seconds;
  json anomalies = json::array();
  for (const TrialAnomaly& f : report.failures) {
    anomalies.push_back({{"trial", f.trial_index}, {"seed", f.seed}, {"message", f.message}});
  }
  doc["failures"] = std::move(anomalies);
  json errors = json::array();
  for (const TrialAnomaly& e : report.errors) {
    errors.push_back({{"trial", e.trial_index}, {"seed", e.seed}, {"message", e.message}});
  }
  doc["errors"] = std::move(errors);
  return doc.dump(2) + "\n";
}

std::string render_frame_table(const FrameReport& report) {
  const JointDistribution& alpha = report.alpha;
  std::size_t label_width = 7;  // "outcome"
  std::vector<std::string> outcome_labels;
  outcome_labels.reserve(alpha.n_a() * alpha.n_b());
  for (std::size_t i = 0; i < alpha.n_a(); ++i) {
    for (std::size_t j = 0; j < alpha.n_b(); ++j) {
      std::string label = "(" + alpha.labels_a()[i] + ", " + alpha.labels_b()[j] + ")";
      label_width = std::max(label_width, label.size());
      outcome_labels.push_back(std::move(label));
    }
  }

  std::ostringstream out;
  out << "scenario: " << report.scenario_name << " (" << alpha.n_a() << " x " << alpha.n_b()
      << " outcomes)\n\n";
  out << "  " << pad_to("outcome", label_width + 2) << pad_to("alpha", 11)
      << pad_to("beta", 11) << pad_to("gamma", 11) << "\n";
  std::size_t k = 0;
  for (std::size_t i = 0; i < alpha.n_a(); ++i) {
    for (std::size_t j = 0; j < alpha.n_b(); ++j, ++k) {
      out << "  " << pad_to(outcome_labels[k], label_width + 2)
          << pad_to(fixed6(report.alpha(i, j)), 11) << pad_to(fixed6(report.beta(i, j)), 11)
          << pad_to(fixed6(report.gamma(i, j)), 11) << "\n";
    }
  }
  out << "\ndeviations (max entrywise):\n";
  out << "  alpha vs beta    " << sci3(report.dev_alpha_beta) << "   (tol "
      << sci3(report.tolerances.frame) << ")\n";
  out << "  alpha vs gamma   " << sci3(report.dev_alpha_gamma) << "   (tol "
      << sci3(report.tolerances.frame) << ")\n";
  out << "  beta vs gamma    " << sci3(report.dev_beta_gamma) << "   (tol "
      << sci3(report.tolerances.frame) << ")\n";
  out << "  choi identity    " << sci3(report.choi_deviation) << "   (tol "
      << sci3(report.tolerances.choi) << ")\n";
  out << "  star (acausal)   " << sci3(report.star_acausal_deviation) << "   (tol "
      << sci3(report.tolerances.star) << ")\n";
  out << "  star (causal)    " << sci3(report.star_causal_deviation) << "   (tol "
      << sci3(report.tolerances.star) << ")\n";
  out << "\nresult: " << verdict(report.pass) << "\n";
  return out.str();
}

std::string render_nosignal_table(const NoSignallingReport& report) {
  std::ostringstream out;
  out << "scenario: " << report.scenario_name << "\n\n";
  out << "  " << pad_to("b outcome", 11) << pad_to("under A", 12) << pad_to("under A'", 12)
      << pad_to("analytic", 12) << "\n";
  for (std::size_t j = 0; j < report.analytic_marginal.size(); ++j) {
    out << "  " << pad_to("b" + std::to_string(j), 11)
        << pad_to(fixed6(report.marginal_under_a[j]), 12)
        << pad_to(fixed6(report.marginal_under_alt[j]), 12)
        << pad_to(fixed6(report.analytic_marginal[j]), 12) << "\n";
  }
  out << "\nmax marginal deviation: " << sci3(report.max_deviation) << "   (tol "
      << sci3(report.tolerance) << ")\n";
  out << "result: " << verdict(report.pass) << "\n";
  return out.str();
}

std::string render_batch_summary(const BatchReport& report) {
  std::ostringstream out;
  out << "trials: " << report.n_trials << "   pass: " << report.n_pass
      << "   fail: " << report.n_fail << "   errors: " << report.n_error << "\n";
  out << "worst frame deviation: " << sci3(report.worst_frame_deviation) << " (seed "
      << report.worst_seed << ", trial " << report.worst_trial_index << ")\n";
  out << "worst choi deviation:  " << sci3(report.worst_choi_deviation) << "\n";
  out << "worst star deviation:  " << sci3(report.worst_star_deviation) << "\n";
  out << "elapsed: " << fixed6(report.total_seconds) << " s\n";
  const bool pass = report.n_fail == 0 && report.n_error == 0;
  out << "result: " << verdict(pass) << "\n";
  return out.str();
}

}  // namespace qcf::io
