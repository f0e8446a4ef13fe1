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

#include "groverian/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace groverian {
namespace {

void check_matching(const PureState& state, const Oracle& oracle) {
  if (state.num_qubits() != oracle.num_qubits()) {
    throw std::invalid_argument("state has " + std::to_string(state.num_qubits()) + " qubits but oracle has " +
                                std::to_string(oracle.num_qubits()));
  }
}

void flip_marked(Vector& amps, const Oracle& oracle) {
  for (std::uint64_t m : oracle.marked()) amps(static_cast<Eigen::Index>(m)) *= -1.0;
}

void invert_about_mean(Vector& amps) {
  const Complex mean = amps.mean();
  amps = ((2.0 * mean) - amps.array()).matrix();
}

}  // namespace

Oracle::Oracle(int num_qubits, std::vector<std::uint64_t> marked)
    : num_qubits_(num_qubits), marked_(std::move(marked)) {
  if (num_qubits < 1 || num_qubits > 24) throw std::invalid_argument("oracle qubit count out of range");
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  if (marked_.empty()) throw std::invalid_argument("oracle needs at least one marked state");
  std::sort(marked_.begin(), marked_.end());
  if (std::adjacent_find(marked_.begin(), marked_.end()) != marked_.end()) {
    throw std::invalid_argument("oracle marked states must be distinct");
  }
  if (marked_.back() >= dim) {
    throw std::invalid_argument("marked index " + std::to_string(marked_.back()) + " out of range for " +
                                std::to_string(num_qubits) + " qubits");
  }
  if (marked_.size() >= dim) throw std::invalid_argument("oracle must leave at least one unmarked state");
}

PureState uniform_state(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxGroverQubits) {
    throw std::invalid_argument("uniform_state: qubit count " + std::to_string(num_qubits) + " outside [1, " +
                                std::to_string(kMaxGroverQubits) + "]");
  }
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  return PureState(num_qubits, Vector::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim))));
}

PureState oracle_apply(const PureState& state, const Oracle& oracle) {
  check_matching(state, oracle);
  Vector amps = state.amplitudes();
  flip_marked(amps, oracle);
  return PureState(state.num_qubits(), std::move(amps));
}

PureState diffusion_apply(const PureState& state) {
  Vector amps = state.amplitudes();
  invert_about_mean(amps);
  return PureState(state.num_qubits(), std::move(amps));
}

int optimal_iterations(int num_qubits, std::uint64_t num_marked) {
  const double n_states = std::ldexp(1.0, num_qubits);
  if (num_marked < 1 || static_cast<double>(num_marked) >= n_states) {
    throw std::invalid_argument("optimal_iterations: need 1 <= M < 2^n");
  }
  const double theta = std::asin(std::sqrt(static_cast<double>(num_marked) / n_states));
  const double k = std::round(std::numbers::pi / (4.0 * theta) - 0.5);
  return std::max(0, static_cast<int>(k));
}

GroverRun grover_run(const PureState& initial, const Oracle& oracle, int iterations) {
  check_matching(initial, oracle);
  if (iterations < 0) throw std::invalid_argument("grover_run: iterations must be non-negative");
  Vector amps = initial.amplitudes();
  for (int k = 0; k < iterations; ++k) {
    flip_marked(amps, oracle);
    invert_about_mean(amps);
  }
  PureState final_state(initial.num_qubits(), std::move(amps));
  const double success = marked_probability(final_state, oracle);
  return GroverRun{iterations, std::move(final_state), success};
}

PureState grover_adjoint_apply(const PureState& state, const Oracle& oracle, int iterations) {
  check_matching(state, oracle);
  Vector amps = state.amplitudes();
  for (int k = 0; k < iterations; ++k) {
    invert_about_mean(amps);
    flip_marked(amps, oracle);
  }
  return PureState(state.num_qubits(), std::move(amps));
}

double marked_probability(const PureState& state, const Oracle& oracle) {
  check_matching(state, oracle);
  double p = 0.0;
  for (std::uint64_t m : oracle.marked()) p += std::norm(state[m]);
  return p;
}

double predicted_success(const PureState& psi) {
  // <eta|psi> = sum_i psi_i / sqrt(N); avoids building |eta> for large n.
  const Complex s = psi.amplitudes().sum();
  return std::norm(s) / static_cast<double>(psi.dim());
}

}  // namespace groverian
