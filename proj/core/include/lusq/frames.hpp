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

#include <span>
#include <vector>

#include "lusq/quantum_state.hpp"
#include "lusq/types.hpp"

namespace lusq {

/// Bloch vectors shorter than this have no usable mean-spin direction.
inline constexpr double kDegeneracyThreshold = 1e-9;

/**
 * Right-handed orthonormal triad (n_perp, n_vdash, n_0) attached to one qubit,
 * with n_0 along the qubit's mean spin. Degenerate qubits (vanishing Bloch
 * vector) get the canonical (x, y, z) triad.
 */
struct BlochFrame {
  Vec3 n_perp = Vec3::UnitX();
  Vec3 n_vdash = Vec3::UnitY();
  Vec3 n_0 = Vec3::UnitZ();
  double bloch_len = 0.0;
  bool degenerate = true;

  /// n_perp cos(theta) + n_vdash sin(theta).
  Vec3 transverse(double theta) const;
};

/// (<sigma_x>, <sigma_y>, <sigma_z>) of qubit `i`.
Vec3 bloch_vector(const QuantumState& state, int i);

/// Frame whose n_0 follows `bloch`; the transverse pair starts from the
/// coordinate axis least aligned with n_0.
BlochFrame build_frame(const Vec3& bloch);

/// One frame per qubit.
std::vector<BlochFrame> build_frames(const QuantumState& state);

/// <J_0> = (1/2) sum_i |<sigma_i>|.
double j0_expectation(std::span<const BlochFrame> frames);

/// T^{(ij)}_{ab} = <sigma_{i a} sigma_{j b}> for a pair i < j.
struct CorrelationMatrix {
  int i = 0;
  int j = 1;
  Mat3 t = Mat3::Zero();
};

CorrelationMatrix correlation_matrix(const QuantumState& state, int i, int j);

/**
 * All pairwise correlation matrices of a state, computed once and read-only
 * afterwards. Lookups with i > j return the transpose of the stored (j, i) entry.
 */
class CorrelationTable {
 public:
  explicit CorrelationTable(const QuantumState& state);
  /// Builds a table from explicit matrices, indexed row-major over pairs i < j.
  CorrelationTable(int n_qubits, std::vector<Mat3> upper);

  int n_qubits() const { return n_qubits_; }
  Mat3 operator()(int i, int j) const;
  const Mat3& upper(int i, int j) const;

 private:
  std::size_t index(int i, int j) const;

  int n_qubits_;
  std::vector<Mat3> upper_;
};

}  // namespace lusq
