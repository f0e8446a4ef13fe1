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

// Seeded randomness with a documented, platform-independent bit stream.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Seeds are expanded with SplitMix64, and uniform/normal variates are
// derived from raw engine words by hand rather than through the standard
// distributions, whose algorithms are implementation-defined.

#include <cstdint>
#include <random>

#include "groverian/qstate.hpp"

namespace groverian {

/// SplitMix64 finalizer; also used to derive independent per-task seeds.
std::uint64_t splitmix64(std::uint64_t x);

class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Independent generator for sub-task `stream` (e.g. one optimizer restart).
  /// Depends only on the parent seed, never on how much was drawn from it.
  Rng fork(std::uint64_t stream) const;

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal via Box-Muller.
  double normal();
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Haar-random pure state (normalized complex Gaussian vector).
PureState haar_state(int num_qubits, Rng& rng);

/// cos(gamma) |eta> + sin(gamma) |xi> with |eta> the uniform superposition and
/// |xi> a random state orthogonal to it.
PureState state_with_uniform_overlap(int num_qubits, double gamma, Rng& rng);

/// Ginibre matrix with i.i.d. standard complex normal entries.
Matrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Density matrix G G^dag / Tr(G G^dag) with a dim x rank Ginibre G; rank 0 means full rank.
DensityMatrix random_density(int num_qubits, Rng& rng, int rank = 0);

/// Haar-random unitary (QR of a Ginibre matrix with the R-diagonal phase fixed).
Matrix random_unitary(Eigen::Index dim, Rng& rng);

}  // namespace groverian
