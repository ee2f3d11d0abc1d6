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

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace lusq {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using Mat2c = Eigen::Matrix2cd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/** Pauli axis label. The numeric value doubles as a 3-vector component index. */
enum class Axis : int { X = 0, Y = 1, Z = 2 };

inline constexpr Axis kAxes[] = {Axis::X, Axis::Y, Axis::Z};

/** Malformed input: wrong shape, arity, index, or unparsable data. */
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Input that parses but breaks a physical invariant (normalization, positivity, ...). */
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * A real number that may be undefined, carrying a machine-readable reason
 * when it is. Used for ratios whose denominator can vanish.
 */
class MaybeReal {
 public:
  MaybeReal() : reason_("not computed") {}
  static MaybeReal of(double v) {
    MaybeReal m;
    m.value_ = v;
    m.reason_.clear();
    return m;
  }
  static MaybeReal undefined(std::string reason) {
    MaybeReal m;
    m.reason_ = std::move(reason);
    return m;
  }

  bool defined() const { return value_.has_value(); }
  double value() const {
    if (!value_) throw std::logic_error("MaybeReal: value is undefined (" + reason_ + ")");
    return *value_;
  }
  const std::string& reason() const { return reason_; }

  friend bool operator==(const MaybeReal&, const MaybeReal&) = default;

 private:
  std::optional<double> value_;
  std::string reason_;
};

}  // namespace lusq
