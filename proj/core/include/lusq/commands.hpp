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

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lusq/families.hpp"
#include "lusq/io.hpp"
#include "lusq/squeezing.hpp"

namespace lusq {

/// Full analysis of a serialized state file. Throws InputError / InvariantViolation.
ReportDocument analyze_text(std::string_view state_text, const MinimizerConfig& config,
                            bool with_verdict = false, bool with_timing = false);

struct SweepRequest {
  Family family = Family::PsiPrime;
  std::string param = "phi";
  double from = 0.0;
  double to = 0.0;
  /// Number of rows; both endpoints are included when steps >= 2.
  int steps = 2;
  std::map<std::string, double> fixed;
  MinimizerConfig config;
};

struct SweepRow {
  double param = 0.0;
  MaybeReal xi_1;
  MaybeReal xi_2;
  double xi_tilde_1 = 0.0;
  MaybeReal xi_tilde_2;
  MaybeReal concurrence;
  double j0 = 0.0;
};

/// Parameter grid from + (to - from) k / (steps - 1), k = 0..steps-1.
std::vector<double> sweep_grid(double from, double to, int steps);

std::vector<SweepRow> run_sweep(const SweepRequest& request);

/// Columns: <param>,xi_1,xi_2,xi_tilde_1,xi_tilde_2,concurrence,j0
std::string sweep_csv(std::string_view param_name, const std::vector<SweepRow>& rows);

}  // namespace lusq
