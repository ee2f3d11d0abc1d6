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

#include <cstdint>
#include <vector>

#include "lusq/quantum_state.hpp"
#include "lusq/squeezing.hpp"
#include "lusq/types.hpp"

namespace lusq {

/**
 * U_1 (x) ... (x) U_N together with the rotations O_i defined by
 * U_i^dagger sigma_a U_i = sum_b (O_i)_{ab} sigma_b.
 */
struct LocalUnitaryLayer {
  std::vector<Mat2c> unitaries;
  std::vector<Mat3> rotations;

  /// Validates unitarity and fills `rotations`.
  static LocalUnitaryLayer from_unitaries(std::vector<Mat2c> unitaries);
  int arity() const { return static_cast<int>(unitaries.size()); }
};

/// Tolerance on U^dagger U = 1.
inline constexpr double kUnitaryTolerance = 1e-12;

/// (U_1 (x) ... (x) U_N)|psi>, or U rho U^dagger for mixed states.
QuantumState apply_local(const QuantumState& state, const LocalUnitaryLayer& layer);

/// SO(3) image of a single-qubit unitary under conjugation; global phase drops out.
Mat3 su2_to_so3(const Mat2c& u);

/// Haar-distributed single-qubit unitary from stream `stream` of `seed`.
Mat2c haar_unitary(std::uint64_t seed, std::uint64_t stream);

/// N independent Haar unitaries; qubit q draws from stream q.
LocalUnitaryLayer random_local_layer(int n_qubits, std::uint64_t seed);

struct InvarianceResult {
  /// max |xi_tilde_k(U rho U^dagger) - xi_tilde_k(rho)| over trials and k in {1, 2}.
  double max_deviation = 0.0;
  double max_j0_deviation = 0.0;
  int trials = 0;
  /// Trials where xi_tilde_2 was undefined on either side.
  int xi2_skipped = 0;
};

/// Deviation of xi_tilde_1, xi_tilde_2 and <J_0> under one given layer.
InvarianceResult invariance_deviation(const QuantumState& state, const LocalUnitaryLayer& layer,
                                      const MinimizerConfig& config = {});

/// Runs `trials` random layers (trial t uses seed mix_seed(seed, t)).
InvarianceResult invariance_check(const QuantumState& state, int trials, std::uint64_t seed,
                                  const MinimizerConfig& config = {});

}  // namespace lusq
