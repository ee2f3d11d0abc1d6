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
#include <vector>

#include <gtest/gtest.h>

#include "lusq/families.hpp"
#include "lusq/quantum_state.hpp"
#include "oracles/oracles.hpp"
#include "unit/test_util.hpp"

namespace lusq {
namespace {

using testing::basis_state;
using testing::bell;

TEST(MakePure, BasisStateIsNormalized) {
  CVector v(4);
  v << 1, 0, 0, 0;
  const auto s = make_pure(2, v);
  EXPECT_TRUE(s.is_pure());
  EXPECT_FALSE(s.renormalized());
  EXPECT_DOUBLE_EQ(s.amplitudes().squaredNorm(), 1.0);
  EXPECT_EQ(s.dimension(), 4u);
}

TEST(MakePure, CosSinAtQuarterPi) {
  const double phi = std::numbers::pi / 4;
  CVector v(4);
  v << std::cos(phi), 0, 0, std::sin(phi);
  const auto s = make_pure(2, v);
  EXPECT_NEAR(std::abs(s.amplitudes()[0]), std::numbers::sqrt2 / 2, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitudes()[3]), std::numbers::sqrt2 / 2, 1e-15);
}

TEST(MakePure, RenormalizesAndFlags) {
  CVector v(2);
  v << 2, 0;
  const auto s = make_pure(1, v);
  EXPECT_TRUE(s.renormalized());
  EXPECT_DOUBLE_EQ(s.amplitudes()[0].real(), 1.0);
}

TEST(MakePure, Errors) {
  EXPECT_THROW(make_pure(2, CVector::Ones(3)), InputError);
  EXPECT_THROW(make_pure(2, CVector::Zero(4)), InvariantViolation);
  EXPECT_THROW(make_pure(0, CVector::Ones(1)), InputError);
  EXPECT_THROW(make_pure(kMaxQubits + 1, CVector::Ones(2)), InputError);
  CVector nan = CVector::Ones(2);
  nan[0] = std::nan("");
  EXPECT_THROW(make_pure(1, nan), InputError);
}

TEST(MakePure, BasisConventionQubitZeroIsMostSignificant) {
  // |01> lives at index 1: qubit 0 is |0>, qubit 1 is |1>.
  const auto s = basis_state(2, 1);
  EXPECT_DOUBLE_EQ(pauli_expectation(s, 0, Axis::Z), 1.0);
  EXPECT_DOUBLE_EQ(pauli_expectation(s, 1, Axis::Z), -1.0);
}

TEST(MakeMixture, SingletonIsProjector) {
  const std::vector<QuantumState> parts{basis_state(2, 0)};
  const std::vector<double> w{1.0};
  const auto rho = make_mixture(w, parts);
  CMatrix expected = CMatrix::Zero(4, 4);
  expected(0, 0) = 1.0;
  EXPECT_LT((rho.density() - expected).cwiseAbs().maxCoeff(), 1e-15);
  ASSERT_EQ(rho.terms().size(), 1u);
}

TEST(MakeMixture, OrthogonalMixtureIsDiagonal) {
  const std::vector<QuantumState> parts{basis_state(2, 0), basis_state(2, 3)};
  const std::vector<double> w{0.5, 0.5};
  const auto rho = make_mixture(w, parts);
  Eigen::Vector4d diag(0.5, 0, 0, 0.5);
  EXPECT_LT((rho.density() - CMatrix(diag.cast<Complex>().asDiagonal())).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(MakeMixture, RandomProductMixtureIsAValidDensityMatrix) {
  const std::vector<QuantumState> parts{sample_product_state(2, 1), sample_product_state(2, 2)};
  const std::vector<double> w{0.3, 0.7};
  const auto rho = make_mixture(w, parts);
  EXPECT_NEAR(rho.density().trace().real(), 1.0, 1e-12);
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(rho.density());
  EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-12);
}

TEST(MakeMixture, Errors) {
  const std::vector<QuantumState> two{basis_state(2, 0), basis_state(2, 1)};
  const std::vector<double> bad_sum{0.5, 0.4};
  EXPECT_THROW(make_mixture(bad_sum, two), InvariantViolation);
  const std::vector<double> negative{1.5, -0.5};
  EXPECT_THROW(make_mixture(negative, two), InvariantViolation);
  const std::vector<QuantumState> mixed_n{basis_state(2, 0), basis_state(1, 0)};
  const std::vector<double> half{0.5, 0.5};
  EXPECT_THROW(make_mixture(half, mixed_n), InputError);
  const std::vector<double> one{1.0};
  EXPECT_THROW(make_mixture(one, two), InputError);
}

TEST(MakeDensity, ValidatesInvariants) {
  CMatrix rho = CMatrix::Zero(2, 2);
  rho(0, 0) = 0.5;
  rho(1, 1) = 0.5;
  EXPECT_NO_THROW(make_density(1, rho));

  CMatrix non_herm = rho;
  non_herm(0, 1) = 0.1;
  EXPECT_THROW(make_density(1, non_herm), InvariantViolation);

  CMatrix bad_trace = rho * 2.0;
  EXPECT_THROW(make_density(1, bad_trace), InvariantViolation);

  CMatrix negative = CMatrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  EXPECT_THROW(make_density(1, negative), InvariantViolation);

  EXPECT_THROW(make_density(2, rho), InputError);
}

TEST(PauliExpectation, Eigenstates) {
  EXPECT_DOUBLE_EQ(pauli_expectation(basis_state(1, 0), 0, Axis::Z), 1.0);
  CVector plus(2);
  plus << 1, 1;
  EXPECT_NEAR(pauli_expectation(make_pure(1, plus), 0, Axis::X), 1.0, 1e-15);
  EXPECT_NEAR(pauli_expectation(bell(), 0, Axis::Z), 0.0, 1e-15);
}

TEST(PauliExpectation, YEigenstate) {
  CVector plus_i(2);
  plus_i << 1, Complex(0, 1);
  EXPECT_NEAR(pauli_expectation(make_pure(1, plus_i), 0, Axis::Y), 1.0, 1e-15);
}

TEST(PauliExpectation, QubitOutOfRange) {
  EXPECT_THROW(pauli_expectation(bell(), 2, Axis::X), InputError);
  EXPECT_THROW(pauli_expectation(bell(), -1, Axis::X), InputError);
}

TEST(PairPauliExpectation, Examples) {
  EXPECT_DOUBLE_EQ(pair_pauli_expectation(basis_state(2, 0), 0, 1, Axis::Z, Axis::Z), 1.0);
  // Brute-force value over the four amplitudes.
  EXPECT_NEAR(pair_pauli_expectation(bell(), 0, 1, Axis::Y, Axis::Y), -1.0, 1e-15);
  for (double phi : {0.0, 0.3, 1.1, 2.5}) {
    EXPECT_NEAR(pair_pauli_expectation(testing::psi_prime(phi), 0, 1, Axis::X, Axis::X),
                std::sin(2 * phi), 1e-15);
  }
}

TEST(PairPauliExpectation, RejectsSameQubit) {
  EXPECT_THROW(pair_pauli_expectation(bell(), 1, 1, Axis::X, Axis::Y), InputError);
}

TEST(PauliExpectation, AgreesWithExplicitOperators) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto pure = sample_pure_state(3, seed);
    const auto mixed = testing::rank2_state(3, seed, 0.37);
    for (const auto* s : {&pure, &mixed}) {
      for (int i = 0; i < 3; ++i) {
        const Vec3 b = oracle::bloch(*s, i);
        for (Axis a : kAxes) {
          EXPECT_NEAR(pauli_expectation(*s, i, a), b[static_cast<int>(a)], 1e-13);
        }
        for (int j = 0; j < 3; ++j) {
          if (j == i) continue;
          const Mat3 t = oracle::correlation(*s, i, j);
          for (Axis a : kAxes)
            for (Axis c : kAxes)
              EXPECT_NEAR(pair_pauli_expectation(*s, i, j, a, c),
                          t(static_cast<int>(a), static_cast<int>(c)), 1e-13);
        }
      }
    }
  }
}

TEST(StateProperties, ProductStatesFactorize) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = sample_product_state(3, seed);
    for (Axis a : kAxes) {
      for (Axis b : kAxes) {
        EXPECT_NEAR(pair_pauli_expectation(s, 0, 2, a, b),
                    pauli_expectation(s, 0, a) * pauli_expectation(s, 2, b), 1e-12);
      }
    }
  }
}

TEST(StateProperties, BlochLengthAtMostOne) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 1 + static_cast<int>(seed % 4);
    const auto pure = sample_pure_state(n, seed);
    const auto mixed = sample_separable_state(n, 3, seed);
    for (const auto* s : {&pure, &mixed}) {
      for (int q = 0; q < n; ++q) {
        const double len = std::hypot(pauli_expectation(*s, q, Axis::X),
                                      pauli_expectation(*s, q, Axis::Y),
                                      pauli_expectation(*s, q, Axis::Z));
        EXPECT_LE(len, 1.0 + 1e-12);
      }
    }
  }
}

TEST(StateProperties, ExpectationIsLinearInMixtures) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::vector<QuantumState> parts{sample_pure_state(3, seed), sample_pure_state(3, seed + 100),
                                          sample_product_state(3, seed)};
    const std::vector<double> w{0.2, 0.5, 0.3};
    const auto rho = make_mixture(w, parts);
    for (Axis a : kAxes) {
      double expected = 0.0;
      for (std::size_t k = 0; k < parts.size(); ++k) expected += w[k] * pauli_expectation(parts[k], 1, a);
      EXPECT_NEAR(pauli_expectation(rho, 1, a), expected, 1e-12);
    }
    double pair_expected = 0.0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      pair_expected += w[k] * pair_pauli_expectation(parts[k], 0, 2, Axis::X, Axis::Y);
    }
    EXPECT_NEAR(pair_pauli_expectation(rho, 0, 2, Axis::X, Axis::Y), pair_expected, 1e-12);
  }
}

}  // namespace
}  // namespace lusq
