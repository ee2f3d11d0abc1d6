// Copyright 2026 The lusq Authors
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

#include "lusq/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "json.hpp"

namespace lusq {
namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) {
  throw InputError("malformed state file: " + what);
}

const json& require(const json& obj, const char* key) {
  if (!obj.contains(key)) malformed(std::string("missing field '") + key + "'");
  return obj.at(key);
}

double number(const json& v, const std::string& what) {
  if (!v.is_number()) malformed(what + " must be a number");
  return v.get<double>();
}

Complex complex_entry(const json& v) {
  if (!v.is_array() || v.size() != 2) malformed("amplitude entries must be [re, im] pairs");
  return {number(v[0], "real part"), number(v[1], "imaginary part")};
}

CVector amplitude_vector(const json& v, std::size_t dim) {
  if (!v.is_array()) malformed("'amplitudes' must be an array");
  if (v.size() != dim) {
    malformed("'amplitudes' has " + std::to_string(v.size()) + " entries, expected " +
              std::to_string(dim));
  }
  CVector out(static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < dim; ++k) out[static_cast<Eigen::Index>(k)] = complex_entry(v[k]);
  if (!out.allFinite()) malformed("non-finite amplitude");
  return out;
}

void require_normalized(const CVector& v) {
  const double norm2 = v.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw InvariantViolation(fmt::format("amplitudes are not normalized (sum |a|^2 = {:.17g})", norm2));
  }
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

json amplitudes_json(const CVector& v) {
  json arr = json::array();
  for (const auto& a : v) arr.push_back(complex_json(a));
  return arr;
}

json maybe_json(const MaybeReal& m) {
  if (m.defined()) return m.value();
  return json{{"undefined", m.reason()}};
}

MaybeReal maybe_from(const json& v) {
  if (v.is_number()) return MaybeReal::of(v.get<double>());
  return MaybeReal::undefined(v.at("undefined").get<std::string>());
}

QuantumState parse_state(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
  if (!doc.is_object()) malformed("top level must be an object");

  const json& nq = require(doc, "n_qubits");
  if (!nq.is_number_integer()) malformed("'n_qubits' must be an integer");
  const auto n = nq.get<long long>();
  if (n < 1 || n > kMaxQubits) malformed("'n_qubits' out of range [1, " + std::to_string(kMaxQubits) + "]");
  const std::size_t dim = std::size_t{1} << n;

  const json& kind = require(doc, "kind");
  if (!kind.is_string()) malformed("'kind' must be a string");
  if (doc.contains("family") && !doc.at("family").is_object()) malformed("'family' must be an object");

  if (kind == "pure") {
    CVector amps = amplitude_vector(require(doc, "amplitudes"), dim);
    require_normalized(amps);
    return make_pure(static_cast<int>(n), std::move(amps));
  }
  if (kind != "mixed") malformed("'kind' must be \"pure\" or \"mixed\"");

  if (doc.contains("terms")) {
    const json& terms = doc.at("terms");
    if (!terms.is_array() || terms.empty()) malformed("'terms' must be a non-empty array");
    std::vector<double> weights;
    std::vector<QuantumState> parts;
    for (const json& t : terms) {
      if (!t.is_object()) malformed("each term must be an object");
      weights.push_back(number(require(t, "weight"), "'weight'"));
      CVector amps = amplitude_vector(require(t, "amplitudes"), dim);
      require_normalized(amps);
      parts.push_back(make_pure(static_cast<int>(n), std::move(amps)));
    }
    return make_mixture(weights, parts);
  }
  if (doc.contains("matrix")) {
    const json& rows = doc.at("matrix");
    if (!rows.is_array() || rows.size() != dim) malformed("'matrix' must have 2^n rows");
    CMatrix rho(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t r = 0; r < dim; ++r) {
      if (!rows[r].is_array() || rows[r].size() != dim) malformed("'matrix' rows must have 2^n entries");
      for (std::size_t c = 0; c < dim; ++c) {
        rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_entry(rows[r][c]);
      }
    }
    return make_density(static_cast<int>(n), std::move(rho));
  }
  malformed("mixed state needs 'terms' or 'matrix'");
}

}  // namespace

QuantumState parse_state_json(std::string_view text) {
  try {
    return parse_state(text);
  } catch (const json::exception& e) {
    malformed(e.what());
  }
}

std::string state_to_json(const QuantumState& state, const FamilySpec* provenance) {
  json doc;
  doc["n_qubits"] = state.n_qubits();
  if (state.is_pure()) {
    doc["kind"] = "pure";
    doc["amplitudes"] = amplitudes_json(state.amplitudes());
  } else {
    doc["kind"] = "mixed";
    if (!state.terms().empty()) {
      json terms = json::array();
      for (const auto& t : state.terms()) {
        terms.push_back({{"weight", t.weight}, {"amplitudes", amplitudes_json(t.amplitudes)}});
      }
      doc["terms"] = std::move(terms);
    } else {
      json rows = json::array();
      const CMatrix& rho = state.density();
      for (Eigen::Index r = 0; r < rho.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < rho.cols(); ++c) row.push_back(complex_json(rho(r, c)));
        rows.push_back(std::move(row));
      }
      doc["matrix"] = std::move(rows);
    }
  }
  if (provenance) {
    json fam;
    fam["name"] = std::string(family_name(provenance->family));
    fam["params"] = provenance->params;
    if (family_is_random(provenance->family)) fam["seed"] = provenance->seed;
    doc["family"] = std::move(fam);
  }
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw InputError("write failed for " + path.string());
}

QuantumState read_state_file(const std::filesystem::path& path) {
  return parse_state_json(read_text_file(path));
}

std::string content_digest(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::string hex = "sha256:";
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", md[i]);
  return hex;
}

std::string report_to_json(const ReportDocument& doc) {
  const SqueezingReport& r = doc.report;
  json j;
  j["schema_version"] = doc.schema_version;
  j["input_digest"] = doc.input_digest;
  j["config"] = {{"n_restarts", doc.config_echo.restarts_for(r.n_qubits)},
                 {"max_sweeps", doc.config_echo.max_sweeps},
                 {"convergence_tol", doc.config_echo.convergence_tol},
                 {"seed", doc.config_echo.seed}};
  j["report"] = {{"n_qubits", r.n_qubits},
                 {"xi_tilde_1", r.xi_tilde_1},
                 {"xi_tilde_2", maybe_json(r.xi_tilde_2)},
                 {"theta_opt", r.theta_opt},
                 {"var_min", r.var_min},
                 {"j0", r.j0},
                 {"xi_1", maybe_json(r.xi_1)},
                 {"xi_2", maybe_json(r.xi_2)},
                 {"collective_mean_spin_len", r.collective_mean_spin_len},
                 {"converged", r.converged}};
  if (doc.verdict) {
    j["verdict"] = {{"xi_tilde_2", maybe_json(doc.verdict->xi_tilde_2)},
                    {"entangled_certified", doc.verdict->entangled_certified},
                    {"note", doc.verdict->note}};
  }
  if (doc.timing_ms) j["timing_ms"] = *doc.timing_ms;
  return j.dump(2) + "\n";
}

ReportDocument report_from_json(std::string_view text) {
  ReportDocument doc;
  try {
    const json j = json::parse(text);
    doc.schema_version = j.at("schema_version").get<std::string>();
    doc.input_digest = j.at("input_digest").get<std::string>();
    const json& c = j.at("config");
    doc.config_echo.n_restarts = c.at("n_restarts").get<int>();
    doc.config_echo.max_sweeps = c.at("max_sweeps").get<int>();
    doc.config_echo.convergence_tol = c.at("convergence_tol").get<double>();
    doc.config_echo.seed = c.at("seed").get<std::uint64_t>();
    const json& r = j.at("report");
    doc.report.n_qubits = r.at("n_qubits").get<int>();
    doc.report.xi_tilde_1 = r.at("xi_tilde_1").get<double>();
    doc.report.xi_tilde_2 = maybe_from(r.at("xi_tilde_2"));
    doc.report.theta_opt = r.at("theta_opt").get<std::vector<double>>();
    doc.report.var_min = r.at("var_min").get<double>();
    doc.report.j0 = r.at("j0").get<double>();
    doc.report.xi_1 = maybe_from(r.at("xi_1"));
    doc.report.xi_2 = maybe_from(r.at("xi_2"));
    doc.report.collective_mean_spin_len = r.at("collective_mean_spin_len").get<double>();
    doc.report.converged = r.at("converged").get<bool>();
    if (j.contains("verdict")) {
      const json& v = j.at("verdict");
      WitnessVerdict w;
      w.xi_tilde_2 = maybe_from(v.at("xi_tilde_2"));
      w.entangled_certified = v.at("entangled_certified").get<bool>();
      w.note = v.at("note").get<std::string>();
      doc.verdict = std::move(w);
    }
    if (j.contains("timing_ms")) doc.timing_ms = j.at("timing_ms").get<double>();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report document: ") + e.what());
  }
  return doc;
}

std::string format_real(double v) { return fmt::format("{:.17g}", v); }

std::string format_maybe(const MaybeReal& v) {
  return v.defined() ? format_real(v.value()) : "undefined:" + v.reason();
}

std::string report_csv_header(const ReportDocument& doc) {
  std::string h =
      "schema_version,input_digest,n_qubits,xi_tilde_1,xi_tilde_2,var_min,j0,xi_1,xi_2,"
      "collective_mean_spin_len,converged,theta_opt,n_restarts,max_sweeps,convergence_tol,seed";
  if (doc.verdict) h += ",entangled_certified";
  if (doc.timing_ms) h += ",timing_ms";
  return h + "\n";
}

std::string report_csv_row(const ReportDocument& doc) {
  const SqueezingReport& r = doc.report;
  std::string thetas;
  for (std::size_t k = 0; k < r.theta_opt.size(); ++k) {
    if (k) thetas += ';';
    thetas += format_real(r.theta_opt[k]);
  }
  std::string row = fmt::format(
      "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}", doc.schema_version, doc.input_digest,
      r.n_qubits, format_real(r.xi_tilde_1), format_maybe(r.xi_tilde_2), format_real(r.var_min),
      format_real(r.j0), format_maybe(r.xi_1), format_maybe(r.xi_2),
      format_real(r.collective_mean_spin_len), r.converged ? "true" : "false", thetas,
      doc.config_echo.restarts_for(r.n_qubits), doc.config_echo.max_sweeps,
      format_real(doc.config_echo.convergence_tol), doc.config_echo.seed);
  if (doc.verdict) row += doc.verdict->entangled_certified ? ",true" : ",false";
  if (doc.timing_ms) row += "," + format_real(*doc.timing_ms);
  return row + "\n";
}

}  // namespace lusq
