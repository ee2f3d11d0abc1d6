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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "lusq/entanglement.hpp"
#include "lusq/families.hpp"
#include "lusq/frames.hpp"
#include "lusq/local_unitary.hpp"
#include "lusq/squeezing.hpp"
#include "oracles/oracles.hpp"
#include "unit/test_util.hpp"

namespace lusq {
namespace {

using testing::kPi;

TEST(Families, NamesRoundTrip) {
  for (Family f : {Family::Psi, Family::PsiPrime, Family::TwoQubitGeneral, Family::SchmidtPair,
                   Family::ProductZero, Family::SpinCoherent, Family::Ghz, Family::SeparableRandom,
                   Family::PureRandom}) {
    EXPECT_EQ(parse_family(family_name(f)), f);
  }
  EXPECT_FALSE(parse_family("w_state").has_value());
  EXPECT_TRUE(family_is_random(Family::SeparableRandom));
  EXPECT_FALSE(family_is_random(Family::Psi));
}

TEST(Families, PsiQuarterPi) {
  const auto s = build({Family::Psi, {{"phi", kPi / 4}}});
  const double h = std::numbers::sqrt2 / 2;
  EXPECT_NEAR(s.amplitudes()[1].real(), h, 1e-15);
  EXPECT_NEAR(s.amplitudes()[2].real(), h, 1e-15);
  EXPECT_EQ(s.amplitudes()[0], Complex(0.0));
  EXPECT_EQ(s.amplitudes()[3], Complex(0.0));
}

TEST(Families, SchmidtPairUnitIsProductZero) {
  EXPECT_EQ(build({Family::SchmidtPair, {{"lambda1", 1.0}}}).amplitudes(),
            build({Family::ProductZero, {{"n", 2.0}}}).amplitudes());
  const auto half = build({Family::SchmidtPair, {{"lambda1_sq", 0.5}}});
  EXPECT_NEAR(concurrence_pure(half), 1.0, 1e-12);
}

TEST(Families, PsiPrimeIsLocallyRotatedPsi) {
  const auto flip = LocalUnitaryLayer::from_unitaries({Mat2c::Identity(), oracle::pauli_matrix(Axis::X)});
  for (int k = 0; k <= 20; ++k) {
    const double phi = k * kPi / 40;
    EXPECT_EQ(apply_local(testing::psi(phi), flip).amplitudes(), testing::psi_prime(phi).amplitudes());
  }
}

TEST(Families, SpinCoherentIsUnsqueezed) {
  for (int n : {2, 3, 5}) {
    const auto s = build({Family::SpinCoherent, {{"n", double(n)}, {"polar", 0.7}, {"azimuth", 1.9}}});
    const auto r = xi_tilde(s);
    EXPECT_NEAR(r.xi_tilde_1, 1.0, 1e-9);
    EXPECT_NEAR(r.xi_tilde_2.value(), 1.0, 1e-9);
    EXPECT_NEAR(r.xi_1.value(), 1.0, 1e-9);
    EXPECT_NEAR(r.xi_2.value(), 1.0, 1e-9);
  }
}

TEST(Families, Ghz) {
  const auto s = build({Family::Ghz, {{"n", 4.0}}});
  EXPECT_NEAR(std::norm(s.amplitudes()[0]), 0.5, 1e-15);
  EXPECT_NEAR(std::norm(s.amplitudes()[15]), 0.5, 1e-15);
}

TEST(Families, SeparableRandomStructure) {
  const FamilySpec spec{Family::SeparableRandom, {{"n", 4.0}, {"terms", 3.0}}, 77};
  const auto s = build(spec);
  EXPECT_EQ(s.n_qubits(), 4);
  EXPECT_FALSE(s.is_pure());
  ASSERT_EQ(s.terms().size(), 3u);
  double total = 0.0;
  for (const auto& t : s.terms()) {
    EXPECT_GE(t.weight, 0.0);
    total += t.weight;
    // Every term is a product state: all single-qubit Bloch vectors are unit length.
    const auto part = make_pure(4, t.amplitudes);
    for (int q = 0; q < 4; ++q) EXPECT_NEAR(bloch_vector(part, q).norm(), 1.0, 1e-12);
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_EQ(build(spec).density(), s.density());
  EXPECT_NE(build({Family::SeparableRandom, {{"n", 4.0}, {"terms", 3.0}}, 78}).density(), s.density());
}

TEST(Families, ProductSamplesHaveZeroConcurrence) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = sample_product_state(2, seed);
    EXPECT_NEAR(concurrence_pure(s), 0.0, 1e-12);
    const auto r = xi_tilde(s);
    EXPECT_NEAR(r.xi_tilde_1, 1.0, 1e-9);
  }
}

TEST(Families, InvalidParameters) {
  EXPECT_THROW(build({Family::Psi, {{"theta", 0.1}}}), InputError);
  EXPECT_THROW(build({Family::Psi, {{"phi", std::nan("")}}}), InputError);
  EXPECT_THROW(build({Family::SchmidtPair, {{"lambda1", 1.2}}}), InputError);
  EXPECT_THROW(build({Family::SchmidtPair, {{"lambda1", 0.5}, {"lambda1_sq", 0.25}}}), InputError);
  EXPECT_THROW(build({Family::ProductZero, {{"n", 0.0}}}), InputError);
  EXPECT_THROW(build({Family::Ghz, {{"n", 2.5}}}), InputError);
  EXPECT_THROW(build({Family::SeparableRandom, {{"terms", 0.0}}}), InputError);
  EXPECT_THROW(build({Family::TwoQubitGeneral, {{"alpha", 0.0}}}), InvariantViolation);
  const auto scaled = build({Family::TwoQubitGeneral, {{"alpha", 2.0}}});
  EXPECT_TRUE(scaled.renormalized());
  EXPECT_EQ(scaled.amplitudes()[0], Complex(1.0));
}

}  // namespace
}  // namespace lusq
