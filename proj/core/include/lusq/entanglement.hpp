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

#include <string>
#include <utility>

#include "lusq/quantum_state.hpp"
#include "lusq/squeezing.hpp"
#include "lusq/types.hpp"

namespace lusq {

/// Schmidt coefficients of a two-qubit pure state, lambda1 >= lambda2 >= 0.
struct SchmidtPair {
  double lambda1 = 1.0;
  double lambda2 = 0.0;
};

/// Singular values of the amplitude matrix [[a00, a01], [a10, a11]].
SchmidtPair schmidt(const QuantumState& state);

/// C = 2 |a01 a10 - a00 a11| for a two-qubit pure state.
double concurrence_pure(const QuantumState& state);

/// Closed forms (sqrt(1 - C), 1 / sqrt(1 + C)) valid for two-qubit pure states.
std::pair<double, double> pure_pair_closed_form(double concurrence);

/// Witness margin: xi_tilde_2 must fall below 1 - kWitnessMargin to certify.
inline constexpr double kWitnessMargin = 1e-9;

struct WitnessVerdict {
  MaybeReal xi_tilde_2;
  bool entangled_certified = false;
  std::string note;
};

/**
 * Sufficient entanglement test: xi_tilde_2 < 1 certifies entanglement.
 * Anything else is inconclusive. Requires at least two qubits.
 */
WitnessVerdict witness(const QuantumState& state, const MinimizerConfig& config = {});
WitnessVerdict witness_from_report(const QuantumState& state, const SqueezingReport& report);

}  // namespace lusq
