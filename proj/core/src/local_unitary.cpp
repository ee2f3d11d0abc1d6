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

#include "lusq/local_unitary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "lusq/frames.hpp"
#include "lusq/rng.hpp"

namespace lusq {
namespace {

const Mat2c& pauli(int a) {
  static const Mat2c sx = (Mat2c() << 0, 1, 1, 0).finished();
  static const Mat2c sy = (Mat2c() << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  static const Mat2c sz = (Mat2c() << 1, 0, 0, -1).finished();
  return a == 0 ? sx : (a == 1 ? sy : sz);
}

void check_unitary(const Mat2c& u) {
  if (!u.allFinite() || (u.adjoint() * u - Mat2c::Identity()).cwiseAbs().maxCoeff() >
                            kUnitaryTolerance) {
    throw InputError("matrix is not unitary");
  }
}

// Applies U to the row index bit of qubit q, for every column.
void apply_to_rows(CMatrix& m, int n_qubits, int q, const Mat2c& u) {
  const std::uint64_t bit = qubit_bit(n_qubits, q);
  const auto dim = static_cast<std::uint64_t>(m.rows());
  for (std::uint64_t k = 0; k < dim; ++k) {
    if (k & bit) continue;
    const auto r0 = static_cast<Eigen::Index>(k);
    const auto r1 = static_cast<Eigen::Index>(k | bit);
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Complex a = m(r0, c);
      const Complex b = m(r1, c);
      m(r0, c) = u(0, 0) * a + u(0, 1) * b;
      m(r1, c) = u(1, 0) * a + u(1, 1) * b;
    }
  }
}

CVector apply_to_vector(CVector v, int n_qubits, const LocalUnitaryLayer& layer) {
  CMatrix m = std::move(v);
  for (int q = 0; q < n_qubits; ++q) apply_to_rows(m, n_qubits, q, layer.unitaries[q]);
  return m.col(0);
}

}  // namespace

LocalUnitaryLayer LocalUnitaryLayer::from_unitaries(std::vector<Mat2c> unitaries) {
  LocalUnitaryLayer layer;
  layer.rotations.reserve(unitaries.size());
  for (const auto& u : unitaries) layer.rotations.push_back(su2_to_so3(u));
  layer.unitaries = std::move(unitaries);
  return layer;
}

Mat3 su2_to_so3(const Mat2c& u) {
  check_unitary(u);
  Mat3 o;
  for (int a = 0; a < 3; ++a) {
    const Mat2c conj = u.adjoint() * pauli(a) * u;
    for (int b = 0; b < 3; ++b) o(a, b) = 0.5 * (conj * pauli(b)).trace().real();
  }
  return o;
}

QuantumState apply_local(const QuantumState& state, const LocalUnitaryLayer& layer) {
  const int n = state.n_qubits();
  if (layer.arity() != n) {
    throw InputError("layer has " + std::to_string(layer.arity()) + " unitaries for " +
                     std::to_string(n) + " qubits");
  }
  if (state.is_pure()) return make_pure(n, apply_to_vector(state.amplitudes(), n, layer));

  if (!state.terms().empty()) {
    std::vector<double> weights;
    std::vector<QuantumState> parts;
    for (const auto& t : state.terms()) {
      weights.push_back(t.weight);
      parts.push_back(make_pure(n, apply_to_vector(t.amplitudes, n, layer)));
    }
    return make_mixture(weights, parts);
  }

  // U rho U^dagger = (U (U rho)^dagger)^dagger.
  CMatrix m = state.density();
  for (int q = 0; q < n; ++q) apply_to_rows(m, n, q, layer.unitaries[q]);
  CMatrix t = m.adjoint();
  for (int q = 0; q < n; ++q) apply_to_rows(t, n, q, layer.unitaries[q]);
  return make_density(n, t.adjoint());
}

Mat2c haar_unitary(std::uint64_t seed, std::uint64_t stream) {
  auto engine = make_engine(seed, stream);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  Complex a(normal(engine), normal(engine));
  Complex b(normal(engine), normal(engine));
  const double norm = std::sqrt(std::norm(a) + std::norm(b));
  a /= norm;
  b /= norm;
  const Complex e = std::polar(1.0, phase(engine));
  Mat2c u;
  u << a, -std::conj(b) * e, b, std::conj(a) * e;
  return u;
}

LocalUnitaryLayer random_local_layer(int n_qubits, std::uint64_t seed) {
  if (n_qubits < 1) throw InputError("random_local_layer needs n_qubits >= 1");
  std::vector<Mat2c> us;
  us.reserve(static_cast<std::size_t>(n_qubits));
  for (int q = 0; q < n_qubits; ++q) us.push_back(haar_unitary(seed, static_cast<std::uint64_t>(q)));
  return LocalUnitaryLayer::from_unitaries(std::move(us));
}

namespace {

void accumulate(InvarianceResult& acc, const SqueezingReport& before,
                const SqueezingReport& after) {
  acc.max_deviation = std::max(acc.max_deviation, std::abs(after.xi_tilde_1 - before.xi_tilde_1));
  if (before.xi_tilde_2.defined() && after.xi_tilde_2.defined()) {
    acc.max_deviation = std::max(
        acc.max_deviation, std::abs(after.xi_tilde_2.value() - before.xi_tilde_2.value()));
  } else {
    ++acc.xi2_skipped;
  }
  acc.max_j0_deviation = std::max(acc.max_j0_deviation, std::abs(after.j0 - before.j0));
  ++acc.trials;
}

}  // namespace

InvarianceResult invariance_deviation(const QuantumState& state, const LocalUnitaryLayer& layer,
                                      const MinimizerConfig& config) {
  InvarianceResult out;
  accumulate(out, xi_tilde(state, config), xi_tilde(apply_local(state, layer), config));
  return out;
}

InvarianceResult invariance_check(const QuantumState& state, int trials, std::uint64_t seed,
                                  const MinimizerConfig& config) {
  if (trials < 1) throw InputError("invariance_check needs trials >= 1");
  const SqueezingReport base = xi_tilde(state, config);
  InvarianceResult out;
  for (int t = 0; t < trials; ++t) {
    const auto layer =
        random_local_layer(state.n_qubits(), mix_seed(seed, static_cast<std::uint64_t>(t)));
    accumulate(out, base, xi_tilde(apply_local(state, layer), config));
  }
  return out;
}

}  // namespace lusq
