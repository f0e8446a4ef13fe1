// Copyright 2026 The Groverian Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "groverian/pure_measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "groverian/detail/parallel.hpp"
#include "groverian/random.hpp"

namespace groverian {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFlatContraction = 1e-14;

Vector2 bloch_vector(const BlochAngles& a) {
  return Vector2(std::cos(a.theta / 2.0), std::polar(std::sin(a.theta / 2.0), a.phi));
}

void check_matching(const PureState& psi, const ProductStateParams& params) {
  if (psi.num_qubits() != params.num_qubits()) {
    throw std::invalid_argument("state has " + std::to_string(psi.num_qubits()) + " qubits but parameters cover " +
                                std::to_string(params.num_qubits()));
  }
}

std::vector<Vector2> qubit_states(const ProductStateParams& params) {
  std::vector<Vector2> out;
  out.reserve(static_cast<std::size_t>(params.num_qubits()));
  for (const auto& a : params.angles()) out.push_back(bloch_vector(a));
  return out;
}

BlochAngles haar_angles(Rng& rng) {
  const double u = rng.uniform();
  const double v = rng.uniform();
  return {std::acos(1.0 - 2.0 * u), kTwoPi * v};
}

struct RestartOutcome {
  double objective = -1.0;
  std::vector<Vector2> qubits;
  int sweeps = 0;
  bool converged = false;
  double residual = 0.0;
};

RestartOutcome run_restart(const PureState& psi, const PureMeasureConfig& config, Rng rng) {
  const int n = psi.num_qubits();
  RestartOutcome out;
  out.qubits.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out.qubits.push_back(bloch_vector(haar_angles(rng)));

  const Vector2 c0 = contract_except(psi.amplitudes(), n, out.qubits, 0);
  double objective = std::norm(out.qubits[0].dot(c0));
  for (int sweep = 1; sweep <= config.max_sweeps; ++sweep) {
    for (int k = 0; k < n; ++k) {
      const Vector2 c = contract_except(psi.amplitudes(), n, out.qubits, k);
      const double norm = c.norm();
      if (norm < kFlatContraction) continue;
      out.qubits[static_cast<std::size_t>(k)] = c / norm;
    }
    const Vector2 c = contract_except(psi.amplitudes(), n, out.qubits, n - 1);
    const double next = std::norm(out.qubits[static_cast<std::size_t>(n - 1)].dot(c));
    out.residual = next - objective;
    out.sweeps = sweep;
    objective = next;
    if (out.residual < config.tol) {
      out.converged = true;
      break;
    }
  }
  out.objective = objective;
  return out;
}

}  // namespace

ProductStateParams::ProductStateParams(std::vector<BlochAngles> angles) : angles_(std::move(angles)) {}

BlochAngles ProductStateParams::angles_of(const Vector2& s) {
  const double a0 = std::abs(s(0));
  const double a1 = std::abs(s(1));
  BlochAngles out;
  out.theta = 2.0 * std::atan2(a1, a0);
  out.phi = (a0 > 0.0 && a1 > 0.0) ? std::arg(s(1)) - std::arg(s(0)) : 0.0;
  out.phi = std::fmod(out.phi, kTwoPi);
  if (out.phi < 0.0) out.phi += kTwoPi;
  if (out.phi >= kTwoPi) out.phi = 0.0;
  return out;
}

ProductStateParams ProductStateParams::uniform(int num_qubits, BlochAngles angles) {
  return ProductStateParams(std::vector<BlochAngles>(static_cast<std::size_t>(num_qubits), angles));
}

Vector2 ProductStateParams::qubit_state(int k) const { return bloch_vector(angles_.at(static_cast<std::size_t>(k))); }

ProductStateParams ProductStateParams::with_qubit(int k, const Vector2& state) const {
  ProductStateParams out = *this;
  out.angles_.at(static_cast<std::size_t>(k)) = angles_of(state);
  return out;
}

ProductStateParams ProductStateParams::canonical() const {
  std::vector<BlochAngles> out;
  out.reserve(angles_.size());
  for (const auto& a : angles_) out.push_back(angles_of(bloch_vector(a)));
  return ProductStateParams(std::move(out));
}

double groverian_from_probability(double p) { return std::sqrt(1.0 - std::clamp(p, 0.0, 1.0)); }

PureState product_state(const ProductStateParams& params) {
  if (params.num_qubits() < 1) throw std::invalid_argument("product_state: no qubits");
  Vector amps = Vector::Ones(1);
  for (int k = 0; k < params.num_qubits(); ++k) {
    const Vector2 q = params.qubit_state(k);
    Vector next(amps.size() * 2);
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
      next(2 * i) = amps(i) * q(0);
      next(2 * i + 1) = amps(i) * q(1);
    }
    amps = std::move(next);
  }
  return PureState::normalized(params.num_qubits(), std::move(amps));
}

Vector2 contract_except(const Vector& psi, int num_qubits, const std::vector<Vector2>& qubits, int k) {
  // psi is viewed as psi[left][b][right] with `left` spanning qubits before k.
  Vector left = Vector::Ones(1);
  for (int j = 0; j < k; ++j) {
    const Vector2 q = qubits[static_cast<std::size_t>(j)].conjugate();
    Vector next(left.size() * 2);
    for (Eigen::Index i = 0; i < left.size(); ++i) {
      next(2 * i) = left(i) * q(0);
      next(2 * i + 1) = left(i) * q(1);
    }
    left = std::move(next);
  }
  Vector right = Vector::Ones(1);
  for (int j = num_qubits - 1; j > k; --j) {
    const Vector2 q = qubits[static_cast<std::size_t>(j)].conjugate();
    Vector next(right.size() * 2);
    // Qubit j is more significant than the qubits already in `right`.
    next.head(right.size()) = q(0) * right;
    next.tail(right.size()) = q(1) * right;
    right = std::move(next);
  }
  const Eigen::Index rsize = right.size();
  Vector2 c = Vector2::Zero();
  for (Eigen::Index l = 0; l < left.size(); ++l) {
    for (Eigen::Index b = 0; b < 2; ++b) {
      const Complex inner = right.transpose() * psi.segment((l * 2 + b) * rsize, rsize);
      c(b) += left(l) * inner;
    }
  }
  return c;
}

double overlap_objective(const PureState& psi, const ProductStateParams& params) {
  check_matching(psi, params);
  const auto qubits = qubit_states(params);
  const Vector2 c = contract_except(psi.amplitudes(), psi.num_qubits(), qubits, 0);
  return std::clamp(std::norm(qubits[0].dot(c)), 0.0, 1.0);
}

ProductStateParams local_update(const PureState& psi, const ProductStateParams& params, int k) {
  check_matching(psi, params);
  if (k < 0 || k >= params.num_qubits()) throw std::invalid_argument("local_update: qubit index out of range");
  const Vector2 c = contract_except(psi.amplitudes(), psi.num_qubits(), qubit_states(params), k);
  const double norm = c.norm();
  if (norm < kFlatContraction) return params;
  return params.with_qubit(k, c / norm);
}

PureMeasureResult p_max_pure(const PureState& psi, const PureMeasureConfig& config) {
  if (config.restarts < 1) throw std::invalid_argument("p_max_pure: need at least one restart");
  const Rng root(config.seed);
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(config.restarts));
  detail::parallel_for(config.restarts, config.threads, [&](int r) {
    outcomes[static_cast<std::size_t>(r)] = run_restart(psi, config, root.fork(static_cast<std::uint64_t>(r)));
  });

  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    if (outcomes[r].objective > outcomes[best].objective) best = r;
  }
  const RestartOutcome& win = outcomes[best];
  std::vector<BlochAngles> angles;
  for (const auto& q : win.qubits) angles.push_back(ProductStateParams::angles_of(q));

  PureMeasureResult result;
  result.p_max = std::clamp(win.objective, 0.0, 1.0);
  result.g = groverian_from_probability(result.p_max);
  result.best_params = ProductStateParams(std::move(angles));
  result.diagnostics = {config.restarts, win.sweeps, win.converged, win.residual};
  return result;
}

namespace {

struct GridPoint {
  double value;
  std::vector<BlochAngles> angles;
};

double direct_objective(const Vector& psi, const std::vector<BlochAngles>& angles) {
  // Explicit amplitude-by-amplitude product state; independent of contract_except.
  const int n = static_cast<int>(angles.size());
  Complex acc = 0.0;
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    Complex amp = 1.0;
    for (int k = 0; k < n; ++k) {
      const bool one = (i >> (n - 1 - k)) & 1;
      const auto& a = angles[static_cast<std::size_t>(k)];
      amp *= one ? std::polar(std::sin(a.theta / 2.0), a.phi) : Complex(std::cos(a.theta / 2.0), 0.0);
    }
    acc += std::conj(amp) * psi(i);
  }
  return std::norm(acc);
}

void keep_top(std::vector<GridPoint>& top, std::size_t limit, double value, const std::vector<BlochAngles>& angles) {
  if (top.size() == limit && value <= top.back().value) return;
  GridPoint p{value, angles};
  auto pos = std::upper_bound(top.begin(), top.end(), p,
                              [](const GridPoint& a, const GridPoint& b) { return a.value > b.value; });
  top.insert(pos, std::move(p));
  if (top.size() > limit) top.pop_back();
}

double compass_refine(const Vector& psi, std::vector<BlochAngles> angles, double step_theta, double step_phi) {
  double best = direct_objective(psi, angles);
  while (step_theta > 1e-10 || step_phi > 1e-10) {
    bool improved = false;
    for (std::size_t k = 0; k < angles.size(); ++k) {
      for (int coord = 0; coord < 2; ++coord) {
        for (double sign : {1.0, -1.0}) {
          auto trial = angles;
          if (coord == 0) {
            trial[k].theta += sign * step_theta;
          } else {
            trial[k].phi += sign * step_phi;
          }
          const double v = direct_objective(psi, trial);
          if (v > best) {
            best = v;
            angles = std::move(trial);
            improved = true;
          }
        }
      }
    }
    if (!improved) {
      step_theta *= 0.5;
      step_phi *= 0.5;
    }
  }
  return best;
}

}  // namespace

double grid_oracle_pure(const PureState& psi, int resolution) {
  const int n = psi.num_qubits();
  if (n > 3) throw std::invalid_argument("grid_oracle_pure supports at most 3 qubits");
  if (resolution < 2 || resolution > 64) throw std::invalid_argument("grid_oracle_pure: resolution must be in [2, 64]");

  std::vector<BlochAngles> grid;
  std::vector<Vector2> conj_states;
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      const BlochAngles a{std::numbers::pi * i / (resolution - 1), kTwoPi * j / resolution};
      grid.push_back(a);
      conj_states.emplace_back(std::cos(a.theta / 2.0), std::polar(std::sin(a.theta / 2.0), -a.phi));
    }
  }

  constexpr std::size_t kRefined = 8;
  std::vector<GridPoint> top;
  std::vector<BlochAngles> current(static_cast<std::size_t>(n));
  // Contract one qubit at a time, most significant first, enumerating the grid at each level.
  auto descend = [&](auto&& self, const Vector& reduced, int level) -> void {
    const Eigen::Index half = reduced.size() / 2;
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const Vector next = conj_states[g](0) * reduced.head(half) + conj_states[g](1) * reduced.tail(half);
      current[static_cast<std::size_t>(level)] = grid[g];
      if (level + 1 == n) {
        keep_top(top, kRefined, std::norm(next(0)), current);
      } else {
        self(self, next, level + 1);
      }
    }
  };
  descend(descend, psi.amplitudes(), 0);

  double best = 0.0;
  for (const auto& p : top) {
    best = std::max(best, compass_refine(psi.amplitudes(), p.angles, std::numbers::pi / (resolution - 1),
                                         kTwoPi / resolution));
  }
  return std::clamp(best, 0.0, 1.0);
}

Matrix2 align_to_plus(const BlochAngles& angles) {
  const Vector2 q = bloch_vector(angles);
  const Vector2 q_perp(-std::conj(q(1)), std::conj(q(0)));
  const double s = 1.0 / std::sqrt(2.0);
  const Vector2 plus(s, s);
  const Vector2 minus(s, -s);
  return plus * q.adjoint() + minus * q_perp.adjoint();
}

double fig1_success(const PureState& psi, const ProductStateParams& params, const Oracle& oracle) {
  check_matching(psi, params);
  if (oracle.num_qubits() != psi.num_qubits()) throw std::invalid_argument("fig1_success: oracle dimension mismatch");
  PureState prepared = psi;
  for (int k = 0; k < params.num_qubits(); ++k) prepared = apply_single_qubit(prepared, k, align_to_plus(params[k]));
  const int iterations = optimal_iterations(oracle.num_qubits(), oracle.marked().size());
  return grover_run(prepared, oracle, iterations).success_probability;
}

}  // namespace groverian
