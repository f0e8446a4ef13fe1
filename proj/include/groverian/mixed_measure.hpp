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

// Groverian measure of mixed states, G(rho) = sqrt(1 - max_{sigma separable} F(rho, sigma)),
// plus the product-operator channels used to probe its LOCC monotonicity.

#include <cstdint>
#include <vector>

#include "groverian/pure_measure.hpp"
#include "groverian/qstate.hpp"

namespace groverian {

/// sigma = sum_mu P_mu |a_mu^1><a_mu^1| (x) ... (x) |a_mu^n><a_mu^n| with
/// pure single-qubit factors.
class SeparableEnsemble {
 public:
  /// Weights must be non-negative and sum to one within 1e-12; every term must
  /// cover the same number of qubits.
  SeparableEnsemble(std::vector<double> weights, std::vector<ProductStateParams> terms);

  int num_qubits() const { return terms_.front().num_qubits(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<ProductStateParams>& terms() const { return terms_; }

 private:
  std::vector<double> weights_;
  std::vector<ProductStateParams> terms_;
};

/// Operators M_i = M_i(1) (x) ... (x) M_i(n) with sum_i M_i^dag M_i = I.
class KrausSet {
 public:
  /// Throws if the factors are inconsistent or completeness fails by more
  /// than 1e-10 in Frobenius norm.
  KrausSet(int num_qubits, std::vector<std::vector<Matrix2>> operators);

  int num_qubits() const { return num_qubits_; }
  int size() const { return static_cast<int>(operators_.size()); }
  const std::vector<std::vector<Matrix2>>& operators() const { return operators_; }
  /// Full 2^n x 2^n matrix of operator i.
  Matrix full_operator(int i) const;
  /// ||sum_i M_i^dag M_i - I||_F.
  double completeness_residual() const;

 private:
  int num_qubits_;
  std::vector<std::vector<Matrix2>> operators_;
};

struct MixedMeasureConfig {
  /// Ensemble size; 0 selects min(4^n, 32).
  int terms = 0;
  int restarts = 30;
  /// Stop a restart once one outer iteration raises the fidelity by less than this.
  double tol = 1e-13;
  int max_iterations = 300;
  /// The best `polish_restarts` restarts are refined by up to
  /// `polish_iterations` L-BFGS steps on the same objective.
  int polish_restarts = 4;
  int polish_iterations = 20000;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct SeparableFidelityResult {
  double fidelity = 0.0;
  SeparableEnsemble ensemble;
  OptimizerDiagnostics diagnostics;
};

struct MixedMeasureResult {
  /// max F(rho, sigma) over the separable states reached by the optimizer.
  double p_max = 0.0;
  double g = 0.0;
  SeparableEnsemble best_ensemble;
  OptimizerDiagnostics diagnostics;
};

inline constexpr int kMaxMixedQubits = 4;

int default_ensemble_terms(int num_qubits);

DensityMatrix ensemble_to_density(const SeparableEnsemble& ensemble);

/// F(rho, ensemble_to_density(ensemble)).
double fidelity_objective(const DensityMatrix& rho, const SeparableEnsemble& ensemble);

/// Lower bound on max_{sigma separable} F(rho, sigma) for 1 <= n <= 4.
///
/// Writes sigma = B B^dag with column mu of B equal to sqrt(P_mu) |a_mu>, so
/// sqrt(F) = ||sqrt(rho) B||_1. Each outer iteration fixes the polar factor W
/// of sqrt(rho) B, which makes the objective linear in B:
/// Re Tr(W^dag sqrt(rho) B) = sum_mu sqrt(P_mu) Re <g_mu|a_mu>, g_mu = sqrt(rho) w_mu.
/// Every a_mu then takes one coordinate-ascent sweep towards the product state
/// closest to g_mu, and the weights become P_mu proportional to |<g_mu|a_mu>|^2.
/// Neither half-step can lower ||sqrt(rho) B||_1, so the fidelity is
/// non-decreasing along each restart.
SeparableFidelityResult max_fidelity_separable(const DensityMatrix& rho, const MixedMeasureConfig& config = {});

MixedMeasureResult groverian_mixed(const DensityMatrix& rho, const MixedMeasureConfig& config = {});

/// p |Psi-><Psi-| + (1 - p) I/4.
DensityMatrix werner_state(double p);

struct PptResult {
  bool ppt = false;
  double min_eigenvalue = 0.0;
};

/// Transposes the second qubit of a two-qubit operator.
Matrix partial_transpose(const Matrix& m);

/// Peres-Horodecki test; for two qubits `ppt` is equivalent to separability.
/// Eigenvalues down to -1e-12 count as non-negative.
PptResult ppt_check(const DensityMatrix& rho);

/// m product operators forming a complete set. The m outcomes are split
/// over the qubits as a mixed-radix index; each qubit measures a random
/// POVM with its share of outcomes (positive elements rescaled by the
/// inverse square root of their sum) and then applies a random unitary that
/// depends on the whole outcome tuple.
KrausSet random_kraus_set(int num_qubits, int num_terms, std::uint64_t seed);

/// sum_i M_i rho M_i^dag.
DensityMatrix apply_channel(const DensityMatrix& rho, const KrausSet& kraus);

}  // namespace groverian
