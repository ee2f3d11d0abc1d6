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

#include "lusq/quantum_state.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace lusq {
namespace {

void check_register_size(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw InputError("n_qubits must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                     std::to_string(n_qubits));
  }
}

void check_qubit(const QuantumState& state, int q) {
  if (q < 0 || q >= state.n_qubits()) {
    throw InputError("qubit index " + std::to_string(q) + " out of range for " +
                     std::to_string(state.n_qubits()) + " qubits");
  }
}

// i^k for k in {0,1,2,3}.
Complex i_power(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

struct SingleQubitPauli {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  int y = 0;
};

SingleQubitPauli single_pauli(int n_qubits, int q, Axis axis) {
  const std::uint64_t bit = qubit_bit(n_qubits, q);
  switch (axis) {
    case Axis::X: return {bit, 0, 0};
    case Axis::Y: return {bit, bit, 1};
    case Axis::Z: return {0, bit, 0};
  }
  return {};
}

}  // namespace

const CVector& QuantumState::amplitudes() const {
  if (!is_pure()) throw InputError("amplitudes() requested from a mixed state");
  return *amplitudes_;
}

const CMatrix& QuantumState::density() const {
  if (is_pure()) throw InputError("density() requested from a pure state; use density_matrix()");
  return *density_;
}

CMatrix QuantumState::density_matrix() const {
  if (is_pure()) return (*amplitudes_) * amplitudes_->adjoint();
  return *density_;
}

QuantumState make_pure(int n_qubits, CVector amplitudes) {
  check_register_size(n_qubits);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
  if (amplitudes.size() != dim) {
    throw InputError("amplitude vector has length " + std::to_string(amplitudes.size()) +
                     ", expected " + std::to_string(dim));
  }
  if (!amplitudes.allFinite()) throw InputError("amplitude vector contains non-finite entries");
  const double norm2 = amplitudes.squaredNorm();
  if (norm2 == 0.0) throw InvariantViolation("zero amplitude vector cannot be normalized");

  QuantumState s;
  s.n_qubits_ = n_qubits;
  s.kind_ = StateKind::Pure;
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    amplitudes /= std::sqrt(norm2);
    s.renormalized_ = true;
  }
  s.amplitudes_ = std::make_shared<const CVector>(std::move(amplitudes));
  return s;
}

QuantumState make_density(int n_qubits, CMatrix rho) {
  check_register_size(n_qubits);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
  if (rho.rows() != dim || rho.cols() != dim) {
    throw InputError("density matrix must be " + std::to_string(dim) + "x" + std::to_string(dim));
  }
  if (!rho.allFinite()) throw InputError("density matrix contains non-finite entries");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kDensityTolerance) {
    throw InvariantViolation("density matrix is not Hermitian");
  }
  CMatrix herm = 0.5 * (rho + rho.adjoint());
  if (std::abs(herm.trace().real() - 1.0) > kDensityTolerance) {
    throw InvariantViolation("density matrix trace is " + std::to_string(herm.trace().real()) +
                             ", expected 1");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(herm, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -kDensityTolerance) {
    throw InvariantViolation("density matrix has a negative eigenvalue " +
                             std::to_string(eig.eigenvalues().minCoeff()));
  }

  QuantumState s;
  s.n_qubits_ = n_qubits;
  s.kind_ = StateKind::Mixed;
  s.density_ = std::make_shared<const CMatrix>(std::move(herm));
  return s;
}

QuantumState make_mixture(std::span<const double> weights, std::span<const QuantumState> states) {
  if (states.empty()) throw InputError("mixture needs at least one component");
  if (weights.size() != states.size()) {
    throw InputError("mixture has " + std::to_string(weights.size()) + " weights for " +
                     std::to_string(states.size()) + " states");
  }
  const int n = states.front().n_qubits();
  double total = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (!std::isfinite(weights[k])) throw InputError("mixture weight is not finite");
    if (weights[k] < 0.0) {
      throw InvariantViolation("mixture weight " + std::to_string(k) + " is negative");
    }
    if (states[k].n_qubits() != n) throw InputError("mixture components differ in qubit count");
    total += weights[k];
  }
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw InvariantViolation("mixture weights sum to " + std::to_string(total) + ", expected 1");
  }

  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  CMatrix rho = CMatrix::Zero(dim, dim);
  bool all_pure = true;
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (states[k].is_pure()) {
      const CVector& a = states[k].amplitudes();
      rho.noalias() += weights[k] * (a * a.adjoint());
    } else {
      all_pure = false;
      rho += weights[k] * states[k].density();
    }
  }

  QuantumState s;
  s.n_qubits_ = n;
  s.kind_ = StateKind::Mixed;
  s.density_ = std::make_shared<const CMatrix>(0.5 * (rho + rho.adjoint()));
  if (all_pure) {
    std::vector<MixtureTerm> terms;
    terms.reserve(states.size());
    for (std::size_t k = 0; k < states.size(); ++k) {
      terms.push_back({weights[k], states[k].amplitudes()});
    }
    s.terms_ = std::make_shared<const std::vector<MixtureTerm>>(std::move(terms));
  }
  return s;
}

double pauli_string_expectation(const QuantumState& state, std::uint64_t x_mask,
                                std::uint64_t z_mask, int y_count) {
  const std::uint64_t dim = state.dimension();
  Complex acc{0.0, 0.0};
  if (state.is_pure()) {
    const CVector& a = state.amplitudes();
    for (std::uint64_t k = 0; k < dim; ++k) {
      const Complex term = std::conj(a[static_cast<Eigen::Index>(k ^ x_mask)]) *
                           a[static_cast<Eigen::Index>(k)];
      acc += (std::popcount(k & z_mask) & 1) ? -term : term;
    }
  } else {
    const CMatrix& rho = state.density();
    for (std::uint64_t k = 0; k < dim; ++k) {
      const Complex term = rho(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k ^ x_mask));
      acc += (std::popcount(k & z_mask) & 1) ? -term : term;
    }
  }
  return (i_power(y_count) * acc).real();
}

double pauli_expectation(const QuantumState& state, int qubit, Axis axis) {
  check_qubit(state, qubit);
  const auto p = single_pauli(state.n_qubits(), qubit, axis);
  return pauli_string_expectation(state, p.x, p.z, p.y);
}

double pair_pauli_expectation(const QuantumState& state, int i, int j, Axis a, Axis b) {
  check_qubit(state, i);
  check_qubit(state, j);
  if (i == j) throw InputError("pair_pauli_expectation requires two distinct qubits");
  const auto pa = single_pauli(state.n_qubits(), i, a);
  const auto pb = single_pauli(state.n_qubits(), j, b);
  return pauli_string_expectation(state, pa.x | pb.x, pa.z | pb.z, pa.y + pb.y);
}

}  // namespace lusq
