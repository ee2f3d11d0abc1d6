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

#include "lusq/commands.hpp"

#include <chrono>

#include <fmt/format.h>

#include "lusq/entanglement.hpp"

namespace lusq {

ReportDocument analyze_text(std::string_view state_text, const MinimizerConfig& config,
                            bool with_verdict, bool with_timing) {
  const auto start = std::chrono::steady_clock::now();
  ReportDocument doc;
  doc.input_digest = content_digest(state_text);
  doc.config_echo = config;
  const QuantumState state = parse_state_json(state_text);
  doc.report = xi_tilde(state, config);
  if (with_verdict) {
    if (state.n_qubits() < 2) throw InputError("witness requires at least two qubits");
    doc.verdict = witness_from_report(state, doc.report);
  }
  if (with_timing) {
    doc.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return doc;
}

std::vector<double> sweep_grid(double from, double to, int steps) {
  if (steps < 1) throw InputError("sweep needs steps >= 1");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) {
    grid.push_back(from);
    return grid;
  }
  for (int k = 0; k < steps; ++k) {
    grid.push_back(k == steps - 1 ? to : from + (to - from) * k / (steps - 1));
  }
  return grid;
}

std::vector<SweepRow> run_sweep(const SweepRequest& request) {
  bool known = false;
  for (const auto& p : family_parameters(request.family)) known = known || p.name == request.param;
  if (!known) {
    throw InputError("family " + std::string(family_name(request.family)) + " has no parameter '" +
                     request.param + "'");
  }

  std::vector<SweepRow> rows;
  for (double value : sweep_grid(request.from, request.to, request.steps)) {
    FamilySpec spec{request.family, request.fixed, request.config.seed};
    spec.params[request.param] = value;
    const QuantumState state = build(spec);
    const SqueezingReport r = xi_tilde(state, request.config);

    SweepRow row;
    row.param = value;
    row.xi_1 = r.xi_1;
    row.xi_2 = r.xi_2;
    row.xi_tilde_1 = r.xi_tilde_1;
    row.xi_tilde_2 = r.xi_tilde_2;
    row.j0 = r.j0;
    row.concurrence = state.n_qubits() == 2 && state.is_pure()
                          ? MaybeReal::of(concurrence_pure(state))
                          : MaybeReal::undefined("not a two-qubit pure state");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string sweep_csv(std::string_view param_name, const std::vector<SweepRow>& rows) {
  std::string out = fmt::format("{},xi_1,xi_2,xi_tilde_1,xi_tilde_2,concurrence,j0\n", param_name);
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{},{},{},{}\n", format_real(r.param), format_maybe(r.xi_1),
                       format_maybe(r.xi_2), format_real(r.xi_tilde_1), format_maybe(r.xi_tilde_2),
                       format_maybe(r.concurrence), format_real(r.j0));
  }
  return out;
}

}  // namespace lusq
