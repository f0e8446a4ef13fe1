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

// End-to-end circuit simulations: the mixed-state pre-processing circuit
// (purify, rotate with U_phi, search) and the entanglement of the Grover
// register along the iterations.

#include <cstdint>
#include <ostream>
#include <vector>

#include "groverian/mixed_measure.hpp"
#include "groverian/pure_measure.hpp"
#include "groverian/purify.hpp"

namespace groverian {

struct Fig2Outcome {
  /// |<phi|psi>|^2, the leading-order success probability.
  double overlap = 0.0;
  /// Measured probability of the marked state after the search.
  double success = 0.0;
  int iterations = 0;
};

/// Applies U_phi to psi and runs Grover on the 2n-qubit register with a single
/// marked state at the optimal iteration count.
Fig2Outcome run_fig2_circuit(const PureState& psi, const PureState& phi, std::uint64_t marked = 0);

/// psi = purify(rho), phi = ensemble_purification(ensemble). n <= 4.
Fig2Outcome fig2_run(const DensityMatrix& rho, const SeparableEnsemble& ensemble, std::uint64_t marked = 0);

/// Allowed |measured - overlap| for a 2n-qubit search register.
double fig2_tolerance(int num_qubits);

struct Fig2Optimum {
  /// Uhlmann-aligned overlap for the best separable state found.
  double value = 0.0;
  /// Success probability of one simulated run with the aligned purification.
  double measured = 0.0;
  /// sqrt(1 - value).
  double g = 0.0;
  bool within_tolerance = false;
  SeparableEnsemble ensemble;
  OptimizerDiagnostics diagnostics;
};

/// Optimizes the separable state with max_fidelity_separable, aligns its
/// purification to purify(rho) with the closed-form reference unitary, and
/// confirms the value by simulation. n <= 3.
Fig2Optimum fig2_optimal_success(const DensityMatrix& rho, const MixedMeasureConfig& config = {},
                                 std::uint64_t marked = 0);

struct TrackRecord {
  int iteration = 0;
  double success_probability = 0.0;
  double groverian = 0.0;
};

/// Grover iterations from `initial` with one marked state, recording the
/// success probability and G(psi_t) for t = 0..max_iterations. n <= 8.
std::vector<TrackRecord> track_groverian(int num_qubits, std::uint64_t marked, const PureState& initial,
                                         int max_iterations, const PureMeasureConfig& config = {});

/// Header `t,success,G`, one row per record, LF line endings.
void write_track_csv(std::ostream& out, const std::vector<TrackRecord>& records);

}  // namespace groverian
