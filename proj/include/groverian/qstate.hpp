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

// Dense linear algebra for multi-qubit pure states and density matrices.
//
// Ordering convention used everywhere in this library: qubit 0 is the
// most-significant bit of a computational-basis index, so for n qubits the
// basis state |x_0 x_1 ... x_{n-1}> has index sum_k x_k 2^{n-1-k}.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Dense>

namespace groverian {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Matrix2 = Eigen::Matrix2cd;
using Vector2 = Eigen::Vector2cd;

/// Largest register any state may span.
inline constexpr int kMaxQubits = 24;

inline constexpr double kStructuralTol = 1e-10;
inline constexpr double kDerivedTol = 1e-9;
/// Eigenvalues in [-kPsdClip, 0) are clipped to zero before square roots.
inline constexpr double kPsdClip = 1e-8;
/// Eigenvalues below this fraction of the largest one are rounding noise of
/// a rank-deficient input and get a zero square root.
inline constexpr double kSqrtNoiseFloor = 1e-13;

/// Unit-norm amplitude vector over n qubits.
class PureState {
 public:
  /// Throws std::invalid_argument if the length is not 2^num_qubits or the
  /// norm deviates from one by more than kStructuralTol.
  PureState(int num_qubits, Vector amplitudes);

  /// Rescales `amplitudes` to unit norm. Throws on a (near) zero vector.
  static PureState normalized(int num_qubits, Vector amplitudes);
  static PureState basis(int num_qubits, std::uint64_t index);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }

 private:
  int num_qubits_;
  Vector amplitudes_;
};

/// Hermitian, positive-semidefinite, unit-trace operator over n qubits.
class DensityMatrix {
 public:
  /// Validates every invariant; throws std::invalid_argument with the
  /// violated property otherwise.
  DensityMatrix(int num_qubits, Matrix matrix);

  int num_qubits() const { return num_qubits_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }

 private:
  int num_qubits_;
  Matrix matrix_;
};

class UnitaryMatrix {
 public:
  /// Requires a square power-of-two dimension and ||U U^dag - I||_F <= 1e-9.
  explicit UnitaryMatrix(Matrix matrix);
  static UnitaryMatrix identity(Eigen::Index dim);

  Eigen::Index dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  UnitaryMatrix adjoint() const;

 private:
  Matrix matrix_;
};

/// Returns a description of the first violated density-matrix invariant, or
/// nothing if `m` is a valid density matrix over `num_qubits` qubits.
std::optional<std::string> density_violation(int num_qubits, const Matrix& m);

/// Contiguous block of qubits [first, first + count) in the MSB-first order.
struct QubitBlock {
  int first = 0;
  int count = 0;
};

PureState tensor_product(const PureState& a, const PureState& b);

/// <phi|psi>, conjugate-linear in `phi`.
Complex overlap(const PureState& phi, const PureState& psi);

DensityMatrix density_of(const PureState& psi);

/// Traces out every qubit outside `keep`.
DensityMatrix partial_trace(const DensityMatrix& rho, QubitBlock keep);

/// Reduced density matrix of a pure state without materializing |psi><psi|.
DensityMatrix reduced_density(const PureState& psi, QubitBlock keep);

/// Principal square root of a Hermitian PSD matrix via eigendecomposition.
/// Eigenvalues at or below kSqrtNoiseFloor * max eigenvalue map to zero.
/// Throws std::domain_error if an eigenvalue lies below -kPsdClip.
Matrix psd_sqrt(const Matrix& m);
Matrix matrix_sqrt(const DensityMatrix& rho);

/// Sum of singular values.
double trace_norm(const Matrix& m);

/// Squared Uhlmann fidelity (Tr|sqrt(rho) sqrt(sigma)|)^2, clamped to [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// True when a = e^{i alpha} b for some alpha, within `tol` in vector norm.
bool equal_up_to_phase(const PureState& a, const PureState& b, double tol = kStructuralTol);

/// Applies a 2x2 operator to one qubit. The result is not renormalized, so the
/// operator should be unitary.
PureState apply_single_qubit(const PureState& psi, int qubit, const Matrix2& op);

/// Kronecker product, first factor on the high-order index.
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace groverian
