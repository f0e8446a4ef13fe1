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

#pragma once

// Grover search as explicit action on state vectors.
//
// One Grover iteration is G = (2|eta><eta| - I) O_f, where O_f flips the sign
// of every marked amplitude. U_G denotes G applied k times.

#include <cstdint>
#include <vector>

#include "groverian/qstate.hpp"

namespace groverian {

inline constexpr int kMaxGroverQubits = 12;

class Oracle {
 public:
  /// `marked` must be non-empty, distinct, in range and leave at least one
  /// unmarked index. Stored sorted.
  Oracle(int num_qubits, std::vector<std::uint64_t> marked);

  int num_qubits() const { return num_qubits_; }
  const std::vector<std::uint64_t>& marked() const { return marked_; }

 private:
  int num_qubits_;
  std::vector<std::uint64_t> marked_;
};

struct GroverRun {
  int iterations;
  PureState final_state;
  double success_probability;
};

/// |eta>, the uniform superposition over 2^n basis states, 1 <= n <= 12.
PureState uniform_state(int num_qubits);

PureState oracle_apply(const PureState& state, const Oracle& oracle);

/// (2|eta><eta| - I) state.
PureState diffusion_apply(const PureState& state);

/// Iteration count maximizing the success probability from |eta> with M
/// marked states out of N = 2^n: round(pi / (4 theta) - 1/2) with
/// theta = asin(sqrt(M / N)), clamped at zero.
int optimal_iterations(int num_qubits, std::uint64_t num_marked);

GroverRun grover_run(const PureState& initial, const Oracle& oracle, int iterations);

/// U_G^dag applied to `state`, i.e. (O_f D)^k with D the diffusion.
PureState grover_adjoint_apply(const PureState& state, const Oracle& oracle, int iterations);

/// Total probability on the marked basis states.
double marked_probability(const PureState& state, const Oracle& oracle);

/// |<eta|psi>|^2, the leading-order success probability when psi is the
/// initial state.
double predicted_success(const PureState& psi);

}  // namespace groverian
