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

#include "groverian/circuits.hpp"

#include <cmath>
#include <iomanip>
#include <stdexcept>
#include <string>

#include "groverian/calibration.hpp"
#include "groverian/grover.hpp"

namespace groverian {

Fig2Outcome run_fig2_circuit(const PureState& psi, const PureState& phi, std::uint64_t marked) {
  if (psi.num_qubits() != phi.num_qubits()) {
    throw std::invalid_argument("run_fig2_circuit: register sizes differ");
  }
  const int total = psi.num_qubits();
  const UnitaryMatrix u_phi = build_u_phi(phi);
  const PureState input(total, u_phi.matrix() * psi.amplitudes());
  const Oracle oracle(total, {marked});
  const int k = optimal_iterations(total, 1);
  const GroverRun run = grover_run(input, oracle, k);
  return Fig2Outcome{std::norm(overlap(phi, psi)), run.success_probability, k};
}

Fig2Outcome fig2_run(const DensityMatrix& rho, const SeparableEnsemble& ensemble, std::uint64_t marked) {
  if (rho.num_qubits() > 4) throw std::invalid_argument("fig2_run: at most 4 qubits");
  if (ensemble.num_qubits() != rho.num_qubits()) throw std::invalid_argument("fig2_run: ensemble size mismatch");
  return run_fig2_circuit(purify(rho).state, ensemble_purification(ensemble).state, marked);
}

double fig2_tolerance(int num_qubits) { return kSuccessErrorConstant / std::ldexp(1.0, 2 * num_qubits); }

Fig2Optimum fig2_optimal_success(const DensityMatrix& rho, const MixedMeasureConfig& config, std::uint64_t marked) {
  if (rho.num_qubits() > 3) throw std::invalid_argument("fig2_optimal_success: at most 3 qubits");
  SeparableFidelityResult best = max_fidelity_separable(rho, config);
  // The optimized ensemble may hold more terms than the reference register can
  // index, so the circuit purifies the separable state it represents instead.
  const DensityMatrix sigma = ensemble_to_density(best.ensemble);
  const PureState psi = purify(rho).state;
  const PureState phi = align_purification(rho, sigma).state;
  const Fig2Outcome run = run_fig2_circuit(psi, phi, marked);
  const bool within = std::abs(run.success - run.overlap) <= fig2_tolerance(rho.num_qubits());
  return Fig2Optimum{run.overlap, run.success, groverian_from_probability(run.overlap), within,
                     std::move(best.ensemble), best.diagnostics};
}

std::vector<TrackRecord> track_groverian(int num_qubits, std::uint64_t marked, const PureState& initial,
                                         int max_iterations, const PureMeasureConfig& config) {
  if (num_qubits > 8) throw std::invalid_argument("track_groverian: at most 8 qubits");
  if (initial.num_qubits() != num_qubits) throw std::invalid_argument("track_groverian: initial state size mismatch");
  if (max_iterations < 0) throw std::invalid_argument("track_groverian: negative iteration count");
  const Oracle oracle(num_qubits, {marked});
  std::vector<TrackRecord> records;
  PureState state = initial;
  for (int t = 0;; ++t) {
    const PureMeasureResult measure = p_max_pure(state, config);
    records.push_back(TrackRecord{t, marked_probability(state, oracle), measure.g});
    if (t == max_iterations) break;
    state = diffusion_apply(oracle_apply(state, oracle));
  }
  return records;
}

void write_track_csv(std::ostream& out, const std::vector<TrackRecord>& records) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(12) << "t,success,G\n";
  for (const auto& r : records) out << r.iteration << ',' << r.success_probability << ',' << r.groverian << '\n';
  out.flags(flags);
  out.precision(precision);
}

}  // namespace groverian
