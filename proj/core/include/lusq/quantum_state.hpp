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

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "lusq/types.hpp"

namespace lusq {

/// Largest register accepted at construction.
inline constexpr int kMaxQubits = 14;

/// Tolerance on the squared norm of a pure state.
inline constexpr double kNormTolerance = 1e-12;
/// Tolerance on Hermiticity, trace and positivity of a density matrix.
inline constexpr double kDensityTolerance = 1e-10;

enum class StateKind { Pure, Mixed };

/// One pure component of a mixture built by make_mixture.
struct MixtureTerm {
  double weight;
  CVector amplitudes;
};

/**
 * An N-qubit state, either a normalized amplitude vector or a density matrix.
 *
 * Basis convention: computational basis, qubit 0 is the most significant bit
 * of the basis index, so for two qubits |01> sits at index 1. Qubit indices
 * in this library are 0-based.
 *
 * Immutable after construction; copies share storage.
 */
class QuantumState {
 public:
  int n_qubits() const { return n_qubits_; }
  StateKind kind() const { return kind_; }
  bool is_pure() const { return kind_ == StateKind::Pure; }
  std::size_t dimension() const { return std::size_t{1} << n_qubits_; }

  /// Amplitudes of a pure state. Throws InputError for mixed states.
  const CVector& amplitudes() const;
  /// Stored density matrix of a mixed state. Throws InputError for pure states.
  const CMatrix& density() const;
  /// Density matrix for either kind (materialized as |psi><psi| for pure states).
  CMatrix density_matrix() const;

  /// True when make_pure had to rescale the input vector.
  bool renormalized() const { return renormalized_; }

  /// Pure components when the state came from a mixture of pure states; empty otherwise.
  std::span<const MixtureTerm> terms() const {
    return terms_ ? std::span<const MixtureTerm>(*terms_) : std::span<const MixtureTerm>{};
  }

 private:
  friend QuantumState make_pure(int, CVector);
  friend QuantumState make_density(int, CMatrix);
  friend QuantumState make_mixture(std::span<const double>, std::span<const QuantumState>);

  QuantumState() = default;

  int n_qubits_ = 0;
  StateKind kind_ = StateKind::Pure;
  bool renormalized_ = false;
  std::shared_ptr<const CVector> amplitudes_;
  std::shared_ptr<const CMatrix> density_;
  std::shared_ptr<const std::vector<MixtureTerm>> terms_;
};

/// Normalized pure state. Rescales non-unit input and flags it.
/// Throws InputError on a length mismatch and InvariantViolation on a zero vector.
QuantumState make_pure(int n_qubits, CVector amplitudes);

/// Density matrix. Validates shape, Hermiticity, unit trace and positivity.
QuantumState make_density(int n_qubits, CMatrix rho);

/// Convex combination sum_k p_k rho_k. Weights must be non-negative and sum to 1.
QuantumState make_mixture(std::span<const double> weights, std::span<const QuantumState> states);

/// Tr(rho sigma_axis) on one qubit.
double pauli_expectation(const QuantumState& state, int qubit, Axis axis);

/// <sigma_{i,a} sigma_{j,b}> for two distinct qubits.
double pair_pauli_expectation(const QuantumState& state, int i, int j, Axis a, Axis b);

/**
 * Expectation of a Pauli string given in symplectic form: the string flips the
 * bits in `x_mask`, applies a sign (-1)^{popcount(k & z_mask)} and a global
 * factor i^{y_count}. Masks use basis-index bit positions.
 */
double pauli_string_expectation(const QuantumState& state, std::uint64_t x_mask,
                                std::uint64_t z_mask, int y_count);

/// Basis-index bit for qubit `q` (0-based, qubit 0 most significant).
inline std::uint64_t qubit_bit(int n_qubits, int q) {
  return std::uint64_t{1} << (n_qubits - 1 - q);
}

}  // namespace lusq
