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

#include "lusq/squeezing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <thread>

namespace lusq {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double canonical_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

void check_angles(int n, std::span<const double> thetas) {
  if (static_cast<int>(thetas.size()) != n) {
    throw InputError("expected " + std::to_string(n) + " angles, got " +
                     std::to_string(thetas.size()));
  }
}

struct RestartOutcome {
  std::vector<double> thetas;
  double start_pair_sum = 0.0;
  double pair_sum = 0.0;
  bool converged = false;
  std::vector<double> history;
};

// Coordinate sweeps converge only linearly along narrow valleys. Finish with
// Newton steps on all angles at once, using |eigenvalue|-floored curvature and
// backtracking so every accepted step lowers the objective.
double polish(const TransverseModel& model, const MinimizerConfig& config,
              std::vector<double>& thetas, double current, std::vector<double>* history,
              bool& converged) {
  const int n = model.n_qubits();
  if (n < 2) return current;
  std::vector<Eigen::Vector2d> u(static_cast<std::size_t>(n));
  std::vector<Eigen::Vector2d> v(static_cast<std::size_t>(n));
  Eigen::VectorXd grad(n);
  Eigen::MatrixXd hess(n, n);
  std::vector<double> trial(thetas.size());

  for (int iter = 0; iter < config.max_sweeps; ++iter) {
    for (int i = 0; i < n; ++i) {
      u[i] = {std::cos(thetas[i]), std::sin(thetas[i])};
      v[i] = {-u[i].y(), u[i].x()};
    }
    for (int i = 0; i < n; ++i) {
      Eigen::Vector2d h = Eigen::Vector2d::Zero();
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        h.noalias() += model.block(i, j) * u[j];
        hess(i, j) = v[i].dot(model.block(i, j) * v[j]);
      }
      grad[i] = v[i].dot(h);
      hess(i, i) = -u[i].dot(h);
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(hess);
    const Eigen::VectorXd& lam = eig.eigenvalues();
    const double floor = std::max(1e-12, 1e-10 * lam.cwiseAbs().maxCoeff());
    const Eigen::VectorXd scaled =
        (eig.eigenvectors().transpose() * grad).cwiseQuotient(lam.cwiseAbs().cwiseMax(floor));
    const Eigen::VectorXd step = -(eig.eigenvectors() * scaled);
    // Predicted decrease of the quadratic model; same meaning as the sweep tolerance.
    if (-0.5 * grad.dot(step) < config.convergence_tol) {
      converged = true;
      break;
    }

    bool accepted = false;
    for (double t = 1.0; t > 1e-6; t *= 0.5) {
      for (int i = 0; i < n; ++i) trial[i] = thetas[i] + t * step[i];
      const double next = model.pair_sum(trial);
      if (next < current) {
        thetas = trial;
        current = next;
        accepted = true;
        break;
      }
    }
    if (history) history->push_back(current);
    if (!accepted) break;
  }
  return current;
}

RestartOutcome descend(const TransverseModel& model, const MinimizerConfig& config, int restart,
                       bool keep_history) {
  const int n = model.n_qubits();
  auto engine = make_engine(config.seed, static_cast<std::uint64_t>(restart));
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);

  RestartOutcome out;
  out.thetas.resize(static_cast<std::size_t>(n));
  std::vector<Eigen::Vector2d> u(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.thetas[i] = angle(engine);
    u[i] = {std::cos(out.thetas[i]), std::sin(out.thetas[i])};
  }

  double current = model.pair_sum(out.thetas);
  out.start_pair_sum = current;
  if (keep_history) out.history.push_back(current);

  for (int sweep = 0; sweep < config.max_sweeps; ++sweep) {
    for (int i = 0; i < n; ++i) {
      // Restricted to theta_i the pair sum is g . u_i + const.
      Eigen::Vector2d g = Eigen::Vector2d::Zero();
      for (int j = 0; j < n; ++j) {
        if (j != i) g.noalias() += model.block(i, j) * u[j];
      }
      if (g.x() == 0.0 && g.y() == 0.0) continue;
      out.thetas[i] = std::atan2(-g.y(), -g.x());
      u[i] = {std::cos(out.thetas[i]), std::sin(out.thetas[i])};
    }
    const double next = model.pair_sum(out.thetas);
    if (keep_history) out.history.push_back(next);
    const double decrease = current - next;
    current = std::min(current, next);
    if (decrease < config.convergence_tol) {
      out.converged = true;
      break;
    }
  }
  out.pair_sum = polish(model, config, out.thetas, current, keep_history ? &out.history : nullptr,
                        out.converged);
  return out;
}

}  // namespace

int MinimizerConfig::restarts_for(int n_qubits) const {
  if (n_restarts) return *n_restarts;
  return n_qubits > 8 ? 64 : 16;
}

void MinimizerConfig::validate() const {
  if (n_restarts && *n_restarts < 1) throw InputError("n_restarts must be >= 1");
  if (max_sweeps < 1) throw InputError("max_sweeps must be >= 1");
  if (!(convergence_tol > 0.0)) throw InputError("convergence_tol must be > 0");
  if (threads < 1) throw InputError("threads must be >= 1");
}

TransverseModel::TransverseModel(const CorrelationTable& table,
                                 std::span<const BlochFrame> frames)
    : n_(table.n_qubits()) {
  if (static_cast<int>(frames.size()) != n_) {
    throw InputError("need one frame per qubit: " + std::to_string(frames.size()) + " frames for " +
                     std::to_string(n_) + " qubits");
  }
  blocks_.assign(static_cast<std::size_t>(n_ * n_), Eigen::Matrix2d::Zero());
  std::vector<Eigen::Matrix<double, 3, 2>> basis(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) basis[i] << frames[i].n_perp, frames[i].n_vdash;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      const Eigen::Matrix2d m = basis[i].transpose() * table.upper(i, j) * basis[j];
      blocks_[static_cast<std::size_t>(i * n_ + j)] = m;
      blocks_[static_cast<std::size_t>(j * n_ + i)] = m.transpose();
    }
  }
}

double TransverseModel::pair_sum(std::span<const double> thetas) const {
  check_angles(n_, thetas);
  std::vector<Eigen::Vector2d> u(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) u[i] = {std::cos(thetas[i]), std::sin(thetas[i])};
  double sum = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) sum += u[i].dot(block(i, j) * u[j]);
  }
  return sum;
}

double TransverseModel::variance(std::span<const double> thetas) const {
  return 0.25 * (n_ + 2.0 * pair_sum(thetas));
}

double variance_at_angles(const CorrelationTable& table, std::span<const BlochFrame> frames,
                          std::span<const double> thetas) {
  const int n = table.n_qubits();
  if (static_cast<int>(frames.size()) != n) throw InputError("need one frame per qubit");
  check_angles(n, thetas);
  std::vector<Vec3> dirs;
  dirs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) dirs.push_back(frames[i].transverse(thetas[i]));
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) sum += dirs[i].dot(table.upper(i, j) * dirs[j]);
  }
  return 0.25 * (n + 2.0 * sum);
}

MinimizerResult minimize_variance(const CorrelationTable& table,
                                  std::span<const BlochFrame> frames,
                                  const MinimizerConfig& config, DescentTrace* trace) {
  config.validate();
  const TransverseModel model(table, frames);
  const int n = model.n_qubits();
  const int restarts = config.restarts_for(n);
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(restarts));

  const bool keep_history = trace != nullptr;
  const int workers = std::min(config.threads, restarts);
  if (workers <= 1) {
    for (int r = 0; r < restarts; ++r) outcomes[r] = descend(model, config, r, keep_history);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int r = w; r < restarts; r += workers) {
          outcomes[r] = descend(model, config, r, keep_history);
        }
      });
    }
  }

  // Lowest restart index wins ties, so the reduction is order-independent.
  int best = 0;
  for (int r = 1; r < restarts; ++r) {
    if (outcomes[r].pair_sum < outcomes[best].pair_sum) best = r;
  }

  const auto to_variance = [n](double pair_sum) {
    return std::clamp(0.25 * (n + 2.0 * pair_sum), 0.0, 0.25 * n * n);
  };
  MinimizerResult result;
  result.best_restart = best;
  result.converged = outcomes[best].converged;
  result.var_min = to_variance(outcomes[best].pair_sum);
  result.theta_opt.reserve(static_cast<std::size_t>(n));
  for (double t : outcomes[best].thetas) result.theta_opt.push_back(canonical_angle(t));
  result.start_variances.reserve(outcomes.size());
  for (const auto& o : outcomes) result.start_variances.push_back(to_variance(o.start_pair_sum));
  if (trace) {
    trace->restarts.clear();
    for (auto& o : outcomes) trace->restarts.push_back(std::move(o.history));
  }
  return result;
}

CollectiveSqueezing xi_collective(const CorrelationTable& table, std::span<const Vec3> bloch) {
  const int n = table.n_qubits();
  if (static_cast<int>(bloch.size()) != n) throw InputError("need one Bloch vector per qubit");

  Vec3 mean = Vec3::Zero();
  for (const auto& b : bloch) mean += 0.5 * b;

  CollectiveSqueezing out;
  out.mean_spin_len = mean.norm();
  if (!(out.mean_spin_len >= kDegeneracyThreshold)) {
    out.xi_1 = MaybeReal::undefined(kZeroMeanSpin);
    out.xi_2 = MaybeReal::undefined(kZeroMeanSpin);
    out.var_min = MaybeReal::undefined(kZeroMeanSpin);
    return out;
  }

  // Symmetrized second moments Re<J_a J_b>; single-qubit terms contribute delta_ab / 4.
  Mat3 second = 0.25 * n * Mat3::Identity();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Mat3& t = table.upper(i, j);
      second += 0.25 * (t + t.transpose());
    }
  }
  const BlochFrame frame = build_frame(mean);
  Eigen::Matrix<double, 3, 2> plane;
  plane << frame.n_perp, frame.n_vdash;
  // <J> has no transverse component, so these are plain variances.
  const Eigen::Matrix2d cov = plane.transpose() * second * plane;
  const double half_trace = 0.5 * (cov(0, 0) + cov(1, 1));
  const double half_diff = 0.5 * (cov(0, 0) - cov(1, 1));
  const double off = 0.5 * (cov(0, 1) + cov(1, 0));
  const double lam = std::max(0.0, half_trace - std::hypot(half_diff, off));

  const double sd = std::sqrt(lam);
  out.var_min = MaybeReal::of(lam);
  out.xi_1 = MaybeReal::of(2.0 * sd / std::sqrt(static_cast<double>(n)));
  out.xi_2 = MaybeReal::of(std::sqrt(static_cast<double>(n)) * sd / out.mean_spin_len);
  return out;
}

CollectiveSqueezing xi_collective(const QuantumState& state) {
  std::vector<Vec3> bloch;
  for (int i = 0; i < state.n_qubits(); ++i) bloch.push_back(bloch_vector(state, i));
  return xi_collective(CorrelationTable(state), bloch);
}

SqueezingReport xi_tilde(const QuantumState& state, const MinimizerConfig& config) {
  const int n = state.n_qubits();
  std::vector<Vec3> bloch;
  std::vector<BlochFrame> frames;
  for (int i = 0; i < n; ++i) {
    bloch.push_back(bloch_vector(state, i));
    frames.push_back(build_frame(bloch.back()));
  }
  const CorrelationTable table(state);
  const MinimizerResult min = minimize_variance(table, frames, config);

  SqueezingReport r;
  r.n_qubits = n;
  r.var_min = min.var_min;
  r.theta_opt = min.theta_opt;
  r.converged = min.converged;
  r.j0 = j0_expectation(frames);
  const double sd = std::sqrt(min.var_min);
  const double root_n = std::sqrt(static_cast<double>(n));
  r.xi_tilde_1 = 2.0 * sd / root_n;
  r.xi_tilde_2 = r.j0 > kDegeneracyThreshold ? MaybeReal::of(root_n * sd / r.j0)
                                            : MaybeReal::undefined(kZeroMeanSpin);

  const CollectiveSqueezing coll = xi_collective(table, bloch);
  r.xi_1 = coll.xi_1;
  r.xi_2 = coll.xi_2;
  r.collective_mean_spin_len = coll.mean_spin_len;
  return r;
}

}  // namespace lusq
