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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lusq/quantum_state.hpp"
#include "lusq/rng.hpp"

namespace lusq {

enum class Family {
  Psi,              ///< cos(phi)|01> + sin(phi)|10>
  PsiPrime,         ///< cos(phi)|00> + sin(phi)|11>
  TwoQubitGeneral,  ///< alpha|00> + beta|01> + gamma|10> + delta|11>
  SchmidtPair,      ///< lambda1|00> + lambda2|11>
  ProductZero,      ///< |0>^N
  SpinCoherent,     ///< every qubit along (polar, azimuth)
  Ghz,              ///< (|0...0> + |1...1>) / sqrt(2)
  SeparableRandom,  ///< flat-simplex mixture of Haar product states
  PureRandom,       ///< Haar-random N-qubit pure state
};

struct FamilySpec {
  Family family = Family::ProductZero;
  std::map<std::string, double> params;
  std::uint64_t seed = kDefaultSeed;
};

struct FamilyParameter {
  std::string name;
  double default_value;
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
/// Parameters a family accepts, with the value used when a spec omits them.
const std::vector<FamilyParameter>& family_parameters(Family f);
bool family_is_random(Family f);

/// Builds the family member. Throws InputError on unknown or out-of-range parameters.
QuantumState build(const FamilySpec& spec);

/// Tensor product of independent Haar-random single-qubit pure states.
QuantumState sample_product_state(int n_qubits, std::uint64_t seed);
/// Haar-random pure state on the full register.
QuantumState sample_pure_state(int n_qubits, std::uint64_t seed);
/// sum_k p_k (product state)_k with p drawn uniformly from the simplex.
QuantumState sample_separable_state(int n_qubits, int terms, std::uint64_t seed);

}  // namespace lusq
