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
#include <optional>
#include <span>
#include <vector>

#include "lusq/frames.hpp"
#include "lusq/quantum_state.hpp"
#include "lusq/rng.hpp"
#include "lusq/types.hpp"

namespace lusq {

/// Multistart coordinate-descent settings for the transverse-variance minimum.
struct MinimizerConfig {
  /// Unset means 16 restarts, or 64 above 8 qubits.
  std::optional<int> n_restarts;
  int max_sweeps = 200;
  /// Stop a restart once one sweep lowers the pair sum by less than this.
  double convergence_tol = 1e-12;
  std::uint64_t seed = kDefaultSeed;
  /// Worker threads for restarts. Never changes the result.
  int threads = 1;

  int restarts_for(int n_qubits) const;
  /// Throws InputError when a field is not positive.
  void validate() const;
};

/**
 * The pair sum sum_{i<j} n_{theta_i}^T T^{(ij)} n_{theta_j} expressed in the
 * transverse planes of the qubit frames: with u_i = (cos theta_i, sin theta_i)
 * it reads sum_{i<j} u_i^T M_{ij} u_j, M_{ij} = [n_perp n_vdash]_i^T T^{(ij)} [n_perp n_vdash]_j.
 */
class TransverseModel {
 public:
  TransverseModel(const CorrelationTable& table, std::span<const BlochFrame> frames);

  int n_qubits() const { return n_; }
  /// M_{ij}; M_{ji} = M_{ij}^T. Undefined for i == j.
  const Eigen::Matrix2d& block(int i, int j) const {
    return blocks_[static_cast<std::size_t>(i * n_ + j)];
  }

  double pair_sum(std::span<const double> thetas) const;
  /// (1/4) [N + 2 pair_sum].
  double variance(std::span<const double> thetas) const;

 private:
  int n_;
  std::vector<Eigen::Matrix2d> blocks_;
};

/// Variance of J_{theta} = (1/2) sum_i sigma_i . n_{theta_i}; angles are per qubit.
double variance_at_angles(const CorrelationTable& table, std::span<const BlochFrame> frames,
                          std::span<const double> thetas);

struct MinimizerResult {
  std::vector<double> theta_opt;  ///< canonicalized to [0, 2 pi)
  double var_min = 0.0;
  /// False when the winning restart hit max_sweeps before converging.
  bool converged = true;
  int best_restart = 0;
  std::vector<double> start_variances;
};

/// Per-restart pair-sum values: the start value followed by one entry per sweep.
struct DescentTrace {
  std::vector<std::vector<double>> restarts;
};

MinimizerResult minimize_variance(const CorrelationTable& table,
                                  std::span<const BlochFrame> frames,
                                  const MinimizerConfig& config, DescentTrace* trace = nullptr);

/// Local-unitary-invariant squeezing together with the collective parameters.
struct SqueezingReport {
  int n_qubits = 0;
  double xi_tilde_1 = 0.0;
  MaybeReal xi_tilde_2;
  std::vector<double> theta_opt;
  double var_min = 0.0;
  double j0 = 0.0;
  MaybeReal xi_1;
  MaybeReal xi_2;
  double collective_mean_spin_len = 0.0;
  bool converged = true;

  friend bool operator==(const SqueezingReport&, const SqueezingReport&) = default;
};

SqueezingReport xi_tilde(const QuantumState& state, const MinimizerConfig& config = {});

/// Collective-frame squeezing parameters. Undefined when |<J>| vanishes.
struct CollectiveSqueezing {
  MaybeReal xi_1;
  MaybeReal xi_2;
  MaybeReal var_min;
  double mean_spin_len = 0.0;
};

CollectiveSqueezing xi_collective(const QuantumState& state);
CollectiveSqueezing xi_collective(const CorrelationTable& table, std::span<const Vec3> bloch);

/// Reason string attached to ratios with a vanishing mean spin.
inline constexpr const char* kZeroMeanSpin = "zero mean spin";

}  // namespace lusq
