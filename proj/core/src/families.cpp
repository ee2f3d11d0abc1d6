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

#include "lusq/families.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>

namespace lusq {
namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::vector<FamilyParameter> params;
  bool random;
};

const std::array<FamilyInfo, 9>& registry() {
  static const std::array<FamilyInfo, 9> r{{
      {Family::Psi, "psi", {{"phi", kQuarterPi}}, false},
      {Family::PsiPrime, "psi_prime", {{"phi", kQuarterPi}}, false},
      {Family::TwoQubitGeneral,
       "two_qubit_general",
       {{"alpha", 1.0},
        {"beta", 0.0},
        {"gamma", 0.0},
        {"delta", 0.0},
        {"alpha_im", 0.0},
        {"beta_im", 0.0},
        {"gamma_im", 0.0},
        {"delta_im", 0.0}},
       false},
      {Family::SchmidtPair, "schmidt_pair", {{"lambda1", 1.0}, {"lambda1_sq", 1.0}}, false},
      {Family::ProductZero, "product_zero", {{"n", 2.0}}, false},
      {Family::SpinCoherent, "spin_coherent", {{"n", 2.0}, {"polar", 0.0}, {"azimuth", 0.0}}, false},
      {Family::Ghz, "ghz", {{"n", 3.0}}, false},
      {Family::SeparableRandom, "separable_random", {{"n", 2.0}, {"terms", 2.0}}, true},
      {Family::PureRandom, "pure_random", {{"n", 2.0}}, true},
  }};
  return r;
}

const FamilyInfo& info(Family f) {
  for (const auto& i : registry()) {
    if (i.family == f) return i;
  }
  throw InputError("unknown family");
}

class Params {
 public:
  explicit Params(const FamilySpec& spec) : spec_(spec), info_(info(spec.family)) {
    for (const auto& [name, value] : spec.params) {
      bool known = false;
      for (const auto& p : info_.params) known = known || p.name == name;
      if (!known) {
        throw InputError("family " + std::string(info_.name) + " has no parameter '" + name + "'");
      }
      if (!std::isfinite(value)) throw InputError("parameter '" + name + "' is not finite");
    }
  }

  bool has(const std::string& name) const { return spec_.params.contains(name); }

  double real(const std::string& name) const {
    if (auto it = spec_.params.find(name); it != spec_.params.end()) return it->second;
    for (const auto& p : info_.params) {
      if (p.name == name) return p.default_value;
    }
    throw InputError("missing parameter '" + name + "'");
  }

  int integer(const std::string& name, int lo, int hi) const {
    const double v = real(name);
    if (v != std::floor(v) || v < lo || v > hi) {
      throw InputError("parameter '" + name + "' must be an integer in [" + std::to_string(lo) +
                       ", " + std::to_string(hi) + "]");
    }
    return static_cast<int>(v);
  }

 private:
  const FamilySpec& spec_;
  const FamilyInfo& info_;
};

CVector basis_pair(std::size_t dim, std::size_t i0, Complex c0, std::size_t i1, Complex c1) {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
  v[static_cast<Eigen::Index>(i0)] += c0;
  v[static_cast<Eigen::Index>(i1)] += c1;
  return v;
}

Eigen::Vector2cd haar_qubit(std::mt19937_64& engine) {
  std::normal_distribution<double> normal;
  Eigen::Vector2cd v;
  v[0] = {normal(engine), normal(engine)};
  v[1] = {normal(engine), normal(engine)};
  return v.normalized();
}

CVector kron_all(const std::vector<Eigen::Vector2cd>& qubits) {
  CVector out = CVector::Ones(1);
  for (const auto& q : qubits) {
    CVector next(out.size() * 2);
    for (Eigen::Index k = 0; k < out.size(); ++k) {
      next[2 * k] = out[k] * q[0];
      next[2 * k + 1] = out[k] * q[1];
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::string_view family_name(Family f) { return info(f).name; }

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& i : registry()) {
    if (i.name == name) return i.family;
  }
  return std::nullopt;
}

const std::vector<FamilyParameter>& family_parameters(Family f) { return info(f).params; }

bool family_is_random(Family f) { return info(f).random; }

QuantumState sample_product_state(int n_qubits, std::uint64_t seed) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) throw InputError("n_qubits out of range");
  std::vector<Eigen::Vector2cd> qubits;
  for (int q = 0; q < n_qubits; ++q) {
    auto engine = make_engine(seed, static_cast<std::uint64_t>(q));
    qubits.push_back(haar_qubit(engine));
  }
  return make_pure(n_qubits, kron_all(qubits));
}

QuantumState sample_pure_state(int n_qubits, std::uint64_t seed) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) throw InputError("n_qubits out of range");
  auto engine = make_engine(seed, 0);
  std::normal_distribution<double> normal;
  CVector v(static_cast<Eigen::Index>(std::size_t{1} << n_qubits));
  for (auto& a : v) a = {normal(engine), normal(engine)};
  return make_pure(n_qubits, v.normalized());
}

QuantumState sample_separable_state(int n_qubits, int terms, std::uint64_t seed) {
  if (terms < 1) throw InputError("separable state needs at least one term");
  auto engine = make_engine(seed, 0);
  // Normalized exponentials are uniform on the simplex.
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> weights(static_cast<std::size_t>(terms));
  double total = 0.0;
  for (auto& w : weights) total += (w = expo(engine));
  for (auto& w : weights) w /= total;
  std::vector<QuantumState> parts;
  for (int k = 0; k < terms; ++k) {
    parts.push_back(sample_product_state(n_qubits, mix_seed(seed, static_cast<std::uint64_t>(k) + 1)));
  }
  return make_mixture(weights, parts);
}

QuantumState build(const FamilySpec& spec) {
  const Params p(spec);
  switch (spec.family) {
    case Family::Psi: {
      const double phi = p.real("phi");
      return make_pure(2, basis_pair(4, 1, std::cos(phi), 2, std::sin(phi)));
    }
    case Family::PsiPrime: {
      const double phi = p.real("phi");
      return make_pure(2, basis_pair(4, 0, std::cos(phi), 3, std::sin(phi)));
    }
    case Family::TwoQubitGeneral: {
      CVector v(4);
      v << Complex(p.real("alpha"), p.real("alpha_im")), Complex(p.real("beta"), p.real("beta_im")),
          Complex(p.real("gamma"), p.real("gamma_im")), Complex(p.real("delta"), p.real("delta_im"));
      return make_pure(2, v);
    }
    case Family::SchmidtPair: {
      if (p.has("lambda1") && p.has("lambda1_sq")) {
        throw InputError("give either lambda1 or lambda1_sq, not both");
      }
      const double l1_sq = p.has("lambda1_sq") ? p.real("lambda1_sq") : std::pow(p.real("lambda1"), 2);
      if (!(l1_sq >= 0.0 && l1_sq <= 1.0) || (p.has("lambda1") && p.real("lambda1") < 0.0)) {
        throw InputError("lambda1 must lie in [0, 1]");
      }
      return make_pure(2, basis_pair(4, 0, std::sqrt(l1_sq), 3, std::sqrt(1.0 - l1_sq)));
    }
    case Family::ProductZero: {
      const int n = p.integer("n", 1, kMaxQubits);
      return make_pure(n, basis_pair(std::size_t{1} << n, 0, 1.0, 0, 0.0));
    }
    case Family::SpinCoherent: {
      const int n = p.integer("n", 1, kMaxQubits);
      const double polar = p.real("polar");
      const double azimuth = p.real("azimuth");
      const Eigen::Vector2cd q(std::cos(polar / 2), std::polar(std::sin(polar / 2), azimuth));
      return make_pure(n, kron_all(std::vector<Eigen::Vector2cd>(static_cast<std::size_t>(n), q)));
    }
    case Family::Ghz: {
      const int n = p.integer("n", 1, kMaxQubits);
      const std::size_t dim = std::size_t{1} << n;
      return make_pure(n, basis_pair(dim, 0, std::numbers::sqrt2 / 2, dim - 1, std::numbers::sqrt2 / 2));
    }
    case Family::SeparableRandom:
      return sample_separable_state(p.integer("n", 1, kMaxQubits), p.integer("terms", 1, 1 << 16),
                                    spec.seed);
    case Family::PureRandom:
      return sample_pure_state(p.integer("n", 1, kMaxQubits), spec.seed);
  }
  throw InputError("unknown family");
}

}  // namespace lusq
