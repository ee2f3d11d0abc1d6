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

#include "lusq/frames.hpp"

#include <cmath>
#include <string>

namespace lusq {

Vec3 BlochFrame::transverse(double theta) const {
  return n_perp * std::cos(theta) + n_vdash * std::sin(theta);
}

Vec3 bloch_vector(const QuantumState& state, int i) {
  return {pauli_expectation(state, i, Axis::X), pauli_expectation(state, i, Axis::Y),
          pauli_expectation(state, i, Axis::Z)};
}

BlochFrame build_frame(const Vec3& bloch) {
  BlochFrame f;
  const double len = bloch.norm();
  f.bloch_len = len;
  if (!(len >= kDegeneracyThreshold)) {
    f.degenerate = true;
    return f;
  }
  f.degenerate = false;
  f.n_0 = bloch / len;

  int axis = 0;
  for (int k = 1; k < 3; ++k) {
    if (std::abs(f.n_0[k]) < std::abs(f.n_0[axis])) axis = k;
  }
  Vec3 seed = Vec3::Unit(axis);
  seed -= seed.dot(f.n_0) * f.n_0;
  f.n_perp = seed.normalized();
  f.n_vdash = f.n_0.cross(f.n_perp);
  return f;
}

std::vector<BlochFrame> build_frames(const QuantumState& state) {
  std::vector<BlochFrame> frames;
  frames.reserve(static_cast<std::size_t>(state.n_qubits()));
  for (int i = 0; i < state.n_qubits(); ++i) frames.push_back(build_frame(bloch_vector(state, i)));
  return frames;
}

double j0_expectation(std::span<const BlochFrame> frames) {
  double sum = 0.0;
  for (const auto& f : frames) sum += f.bloch_len;
  return 0.5 * sum;
}

CorrelationMatrix correlation_matrix(const QuantumState& state, int i, int j) {
  if (i >= j) {
    throw InputError("correlation_matrix requires i < j, got (" + std::to_string(i) + ", " +
                     std::to_string(j) + ")");
  }
  CorrelationMatrix c;
  c.i = i;
  c.j = j;
  for (Axis a : kAxes) {
    for (Axis b : kAxes) {
      c.t(static_cast<int>(a), static_cast<int>(b)) = pair_pauli_expectation(state, i, j, a, b);
    }
  }
  return c;
}

CorrelationTable::CorrelationTable(const QuantumState& state) : n_qubits_(state.n_qubits()) {
  const int n = n_qubits_;
  upper_.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) upper_.push_back(correlation_matrix(state, i, j).t);
  }
}

CorrelationTable::CorrelationTable(int n_qubits, std::vector<Mat3> upper)
    : n_qubits_(n_qubits), upper_(std::move(upper)) {
  if (upper_.size() != static_cast<std::size_t>(n_qubits * (n_qubits - 1) / 2)) {
    throw InputError("correlation table has the wrong number of pair entries");
  }
}

std::size_t CorrelationTable::index(int i, int j) const {
  if (i < 0 || j >= n_qubits_ || i >= j) throw InputError("bad correlation table index");
  // Row-major position of (i, j) in the strict upper triangle.
  return static_cast<std::size_t>(i * (2 * n_qubits_ - i - 1) / 2 + (j - i - 1));
}

const Mat3& CorrelationTable::upper(int i, int j) const { return upper_[index(i, j)]; }

Mat3 CorrelationTable::operator()(int i, int j) const {
  if (i < j) return upper_[index(i, j)];
  return upper_[index(j, i)].transpose();
}

}  // namespace lusq
