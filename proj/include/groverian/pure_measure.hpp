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

// Groverian measure of pure states: P_max(psi) is the largest squared overlap
// of psi with a tensor-product state, and G(psi) = sqrt(1 - P_max).
//
// The maximization runs alternating closed-form coordinate ascent: with every
// qubit but k held fixed, the best state for qubit k is the normalized
// contraction of psi against the others, and the objective becomes the squared
// norm of that contraction.

#include <cstdint>
#include <vector>

#include "groverian/grover.hpp"
#include "groverian/qstate.hpp"

namespace groverian {

/// |phi> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
struct BlochAngles {
  double theta = 0.0;
  double phi = 0.0;
};

class ProductStateParams {
 public:
  ProductStateParams() = default;
  explicit ProductStateParams(std::vector<BlochAngles> angles);

  /// Angles of a normalized single-qubit vector, global phase discarded.
  static BlochAngles angles_of(const Vector2& qubit_state);
  static ProductStateParams uniform(int num_qubits, BlochAngles angles);

  int num_qubits() const { return static_cast<int>(angles_.size()); }
  const std::vector<BlochAngles>& angles() const { return angles_; }
  const BlochAngles& operator[](int k) const { return angles_[static_cast<std::size_t>(k)]; }
  Vector2 qubit_state(int k) const;

  /// Copy with qubit k replaced by `state` (normalized by the caller).
  ProductStateParams with_qubit(int k, const Vector2& state) const;

  /// Maps theta into [0, pi] and phi into [0, 2 pi) without changing the
  /// state beyond a global phase.
  ProductStateParams canonical() const;

 private:
  std::vector<BlochAngles> angles_;
};

struct OptimizerDiagnostics {
  int restarts_used = 0;
  /// Sweeps (pure) or outer iterations (mixed) of the winning restart.
  int iterations = 0;
  bool converged = false;
  /// Last objective change of the winning restart.
  double residual = 0.0;
};

struct PureMeasureConfig {
  int restarts = 20;
  double tol = 1e-10;
  int max_sweeps = 500;
  std::uint64_t seed = 0;
  /// Worker threads for restarts; results do not depend on this value.
  int threads = 1;
};

struct PureMeasureResult {
  double p_max = 0.0;
  double g = 0.0;
  ProductStateParams best_params;
  OptimizerDiagnostics diagnostics;
};

/// sqrt(1 - p) with p clamped to [0, 1].
double groverian_from_probability(double p);

PureState product_state(const ProductStateParams& params);

/// |<product_state(params)|psi>|^2.
double overlap_objective(const PureState& psi, const ProductStateParams& params);

/// Sum over every qubit except k of conj(phi_j) psi: the (unnormalized)
/// optimal state of qubit k given the others. Its squared norm is the best
/// objective reachable by changing qubit k alone.
Vector2 contract_except(const Vector& psi, int num_qubits, const std::vector<Vector2>& qubits, int k);

/// One exact coordinate-ascent step on qubit k. Keeps the previous angles when
/// the contraction norm is below 1e-14 (flat coordinate).
ProductStateParams local_update(const PureState& psi, const ProductStateParams& params, int k);

PureMeasureResult p_max_pure(const PureState& psi, const PureMeasureConfig& config = {});

/// Brute-force reference for n <= 3: exhaustive (theta, phi) grid with
/// `resolution` points per angle and qubit, then compass-search refinement
/// around the best grid points. Shares no code with the coordinate ascent.
double grid_oracle_pure(const PureState& psi, int resolution);

/// Local unitary taking the qubit state of `angles` to |+> and its orthogonal
/// complement to |->.
Matrix2 align_to_plus(const BlochAngles& angles);

/// Pre-processes psi with align_to_plus on every qubit, runs Grover at the
/// optimal iteration count for `oracle`, and returns the measured success
/// probability. Equals overlap_objective(psi, params) + O(1/N).
double fig1_success(const PureState& psi, const ProductStateParams& params, const Oracle& oracle);

}  // namespace groverian
