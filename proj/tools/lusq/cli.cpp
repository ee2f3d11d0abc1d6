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

#include "lusq/cli.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "lusq/commands.hpp"
#include "lusq/entanglement.hpp"
#include "lusq/families.hpp"
#include "lusq/io.hpp"
#include "lusq/local_unitary.hpp"

namespace lusq::cli {
namespace {

constexpr double kInvarianceTolerance = 1e-6;

struct GlobalFlags {
  std::uint64_t seed = kDefaultSeed;
  int restarts = 0;
  std::string report = "json";
  std::string out;
  int threads = 1;
  bool timing = false;

  MinimizerConfig config() const {
    MinimizerConfig c;
    c.seed = seed;
    if (restarts > 0) c.n_restarts = restarts;
    c.threads = threads;
    return c;
  }
};

void emit(const GlobalFlags& g, const std::string& text, std::ostream& out) {
  if (g.out.empty()) {
    out << text;
  } else {
    write_text_file(g.out, text);
  }
}

std::string render(const GlobalFlags& g, const ReportDocument& doc) {
  if (g.report == "csv") return report_csv_header(doc) + report_csv_row(doc);
  return report_to_json(doc);
}

Family family_or_throw(const std::string& name) {
  if (auto f = parse_family(name)) return *f;
  throw InputError("unknown family '" + name + "'");
}

std::map<std::string, double> parse_assignments(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("expected name=value, got '" + item + "'");
    const std::string value = item.substr(eq + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) throw InputError("bad numeric value in '" + item + "'");
    out[item.substr(0, eq)] = v;
  }
  return out;
}

int cmd_analyze(const GlobalFlags& g, const std::string& path, std::ostream& out) {
  const ReportDocument doc = analyze_text(read_text_file(path), g.config(), false, g.timing);
  emit(g, render(g, doc), out);
  return kSuccess;
}

int cmd_witness(const GlobalFlags& g, const std::string& path, std::ostream& out) {
  const ReportDocument doc = analyze_text(read_text_file(path), g.config(), true, g.timing);
  if (!g.out.empty()) write_text_file(g.out, render(g, doc));
  const WitnessVerdict& v = *doc.verdict;
  out << (v.entangled_certified ? "ENTANGLED" : "INCONCLUSIVE")
      << " xi_tilde_2=" << format_maybe(v.xi_tilde_2) << " note=\"" << v.note << "\"\n";
  return v.entangled_certified ? kSuccess : kInconclusive;
}

int cmd_invariance(const GlobalFlags& g, const std::string& path, int trials, std::ostream& out) {
  const QuantumState state = read_state_file(path);
  const InvarianceResult r = invariance_check(state, trials, g.seed, g.config());
  const bool ok = r.max_deviation <= kInvarianceTolerance && r.max_j0_deviation <= kInvarianceTolerance;
  const std::string line =
      fmt::format("max_deviation={} max_j0_deviation={} trials={} xi2_skipped={} {}\n",
                  format_real(r.max_deviation), format_real(r.max_j0_deviation), r.trials,
                  r.xi2_skipped, ok ? "OK" : "EXCEEDED");
  emit(g, line, out);
  return ok ? kSuccess : kInconclusive;
}

int cmd_sweep(const GlobalFlags& g, SweepRequest request, const std::string& family,
              const std::vector<std::string>& fixed, std::ostream& out) {
  request.family = family_or_throw(family);
  request.fixed = parse_assignments(fixed);
  request.config = g.config();
  emit(g, sweep_csv(request.param, run_sweep(request)), out);
  return kSuccess;
}

int cmd_build(const GlobalFlags& g, const std::string& family,
              const std::vector<std::string>& params, std::ostream& out) {
  FamilySpec spec{family_or_throw(family), parse_assignments(params), g.seed};
  const QuantumState state = build(spec);
  emit(g, state_to_json(state, &spec), out);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local-unitary-invariant spin squeezing and entanglement witnesses", "lusq"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--seed", g.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--restarts", g.restarts, "Minimizer restarts (default 16, 64 above 8 qubits)")
      ->check(CLI::PositiveNumber);
  app.add_option("--report", g.report, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "Write output here instead of stdout");
  app.add_option("--threads", g.threads, "Worker threads for restarts")->check(CLI::PositiveNumber);
  app.add_flag("--timing", g.timing, "Include wall time in report documents");

  std::string state_path;
  auto* analyze = app.add_subcommand("analyze", "Squeezing report for a state file");
  analyze->add_option("state", state_path, "State file (JSON)")->required();

  auto* witness_cmd = app.add_subcommand("witness", "Entanglement witness verdict for a state file");
  witness_cmd->add_option("state", state_path, "State file (JSON)")->required();

  int trials = 10;
  auto* invariance = app.add_subcommand("invariance", "Check invariance under random local unitaries");
  invariance->add_option("state", state_path, "State file (JSON)")->required();
  invariance->add_option("--trials", trials, "Random layers to try")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  SweepRequest sweep_req;
  std::string family;
  std::vector<std::string> assignments;
  auto* sweep = app.add_subcommand("sweep", "CSV table over one family parameter");
  sweep->add_option("--family", family, "State family")->required();
  sweep->add_option("--param", sweep_req.param, "Parameter to sweep")->required();
  sweep->add_option("--from", sweep_req.from, "First value")->required();
  sweep->add_option("--to", sweep_req.to, "Last value")->required();
  sweep->add_option("--steps", sweep_req.steps, "Number of rows")
      ->required()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--set", assignments, "Fixed parameter name=value");

  auto* build_cmd = app.add_subcommand("build", "Write a state file for a named family");
  build_cmd->add_option("--family", family, "State family")->required();
  build_cmd->add_option("--param", assignments, "Family parameter name=value");

  std::vector<const char*> argv{"lusq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(g, state_path, out);
    if (*witness_cmd) return cmd_witness(g, state_path, out);
    if (*invariance) return cmd_invariance(g, state_path, trials, out);
    if (*sweep) return cmd_sweep(g, sweep_req, family, assignments, out);
    if (*build_cmd) return cmd_build(g, family, assignments, out);
  } catch (const InvariantViolation& e) {
    err << "lusq: invariant violation: " << e.what() << "\n";
    return kInvariantError;
  } catch (const InputError& e) {
    err << "lusq: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "lusq: error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace lusq::cli
