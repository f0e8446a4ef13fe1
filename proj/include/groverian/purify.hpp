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

// Purifications of n-qubit density matrices into 2n-qubit pure states.
//
// Layout: the reference register R holds the high-order n qubits and Q the
// low-order n qubits, so amplitude (r, q) sits at index r * 2^n + q. Tracing
// out R recovers the n-qubit state.

#include <vector>

#include "groverian/mixed_measure.hpp"
#include "groverian/qstate.hpp"

namespace groverian {

struct Purification {
  DensityMatrix source;
  /// 2n-qubit state whose Q marginal equals `source`.
  PureState state;
};

/// (U_R (x) sqrt(rho) U_Q) sum_i |i>_R |i>_Q. The Q marginal is rho for every
/// pair of unitaries: U_Q only changes which reference basis pairs with which
/// eigenvector.
Purification purify(const DensityMatrix& rho, const UnitaryMatrix& u_r, const UnitaryMatrix& u_q);

/// U_R = U_Q = I.
Purification purify(const DensityMatrix& rho);

/// sum_mu sqrt(P_mu) |mu>_R (x) |a_mu>. Needs at most 2^n terms.
Purification ensemble_purification(const SeparableEnsemble& ensemble);

/// Q marginal of a 2n-qubit state in the R-high layout.
DensityMatrix trace_out_reference(const PureState& state);

/// |eta_i> = H^{(x) total_qubits} |i>.
PureState hadamard_basis_state(std::uint64_t index, int total_qubits);

/// Orthonormal basis whose first element is phi0. Completion candidates are
/// the computational basis states in order; any candidate left with residual
/// norm below 1e-8 after projection is skipped.
std::vector<PureState> gram_schmidt_complete(const PureState& phi0);

/// U_phi with U_phi^dag = sum_i |phi_i><eta_i|, so that U_phi^dag |eta> = |phi>
/// and U_phi |phi> = |eta>.
UnitaryMatrix build_u_phi(const PureState& phi);

/// max over purifications phi of sigma of |<phi|psi>|^2 for the canonical
/// purification psi of rho. With C the R-side cross-overlap of the two
/// canonical purifications, the maximum over reference unitaries is ||C||_1,
/// evaluated here from the eigenvalues of C^dag C.
double uhlmann_max_overlap(const DensityMatrix& rho, const DensityMatrix& sigma);

/// The purification (V (x) I) phi_0 of sigma that attains uhlmann_max_overlap
/// against purify(rho), where phi_0 = purify(sigma) and V is the polar factor
/// of the cross-overlap.
Purification align_purification(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace groverian
