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

#include "lusq/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace lusq {
namespace {

Mat2c amplitude_matrix(const QuantumState& state) {
  if (state.n_qubits() != 2) throw InputError("two-qubit state required");
  if (!state.is_pure()) throw InputError("pure state required");
  const CVector& a = state.amplitudes();
  Mat2c m;
  m << a[0], a[1], a[2], a[3];
  return m;
}

}  // namespace

SchmidtPair schmidt(const QuantumState& state) {
  const Eigen::JacobiSVD<Mat2c> svd(amplitude_matrix(state));
  const auto& s = svd.singularValues();
  return {std::max(s[0], s[1]), std::min(s[0], s[1])};
}

double concurrence_pure(const QuantumState& state) {
  const Mat2c m = amplitude_matrix(state);
  return std::min(1.0, 2.0 * std::abs(m(0, 1) * m(1, 0) - m(0, 0) * m(1, 1)));
}

std::pair<double, double> pure_pair_closed_form(double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw InputError("concurrence must lie in [0, 1]");
  return {std::sqrt(1.0 - c), 1.0 / std::sqrt(1.0 + c)};
}

WitnessVerdict witness_from_report(const QuantumState& state, const SqueezingReport& report) {
  WitnessVerdict v;
  v.xi_tilde_2 = report.xi_tilde_2;
  if (!report.xi_tilde_2.defined()) {
    v.note = "xi_tilde_2 undefined (" + report.xi_tilde_2.reason() + ")";
    if (state.n_qubits() == 2 && state.is_pure()) {
      const double c = concurrence_pure(state);
      v.note += "; for two-qubit pure states use the closed form: concurrence " +
                std::to_string(c) + " gives xi_tilde_2 -> " +
                std::to_string(pure_pair_closed_form(c).second);
    }
    return v;
  }
  const double x = report.xi_tilde_2.value();
  v.entangled_certified = x < 1.0 - kWitnessMargin;
  v.note = v.entangled_certified ? "xi_tilde_2 < 1 certifies entanglement"
                                 : "inconclusive: xi_tilde_2 is not below 1 (the criterion is sufficient, not necessary)";
  return v;
}

WitnessVerdict witness(const QuantumState& state, const MinimizerConfig& config) {
  if (state.n_qubits() < 2) throw InputError("witness requires at least two qubits");
  return witness_from_report(state, xi_tilde(state, config));
}

}  // namespace lusq
