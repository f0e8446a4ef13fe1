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

#include "groverian/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace groverian {
namespace {

std::uint64_t dim_of(int num_qubits) { return std::uint64_t{1} << num_qubits; }

void check_qubit_count(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count " + std::to_string(num_qubits) + " out of range [1, " +
                                std::to_string(kMaxQubits) + "]");
  }
}

bool is_power_of_two(Eigen::Index d) { return d > 0 && (d & (d - 1)) == 0; }

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
  Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace

PureState::PureState(int num_qubits, Vector amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(num_qubits);
  if (static_cast<std::uint64_t>(amplitudes_.size()) != dim_of(num_qubits)) {
    throw std::invalid_argument("pure state over " + std::to_string(num_qubits) + " qubits needs " +
                                std::to_string(dim_of(num_qubits)) + " amplitudes, got " +
                                std::to_string(amplitudes_.size()));
  }
  const double norm2 = amplitudes_.squaredNorm();
  if (!(std::abs(norm2 - 1.0) <= kStructuralTol)) {
    std::ostringstream msg;
    msg << "pure state is not normalized: sum |a_i|^2 = " << norm2;
    throw std::invalid_argument(msg.str());
  }
}

PureState PureState::normalized(int num_qubits, Vector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 1e-300)) throw std::invalid_argument("cannot normalize a zero vector");
  amplitudes /= norm;
  return PureState(num_qubits, std::move(amplitudes));
}

PureState PureState::basis(int num_qubits, std::uint64_t index) {
  check_qubit_count(num_qubits);
  if (index >= dim_of(num_qubits)) throw std::invalid_argument("basis index out of range");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim_of(num_qubits)));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(num_qubits, std::move(v));
}

std::optional<std::string> density_violation(int num_qubits, const Matrix& m) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) return "qubit count out of range";
  const auto d = static_cast<Eigen::Index>(dim_of(num_qubits));
  if (m.rows() != d || m.cols() != d) {
    std::ostringstream msg;
    msg << "density matrix over " << num_qubits << " qubits must be " << d << "x" << d << ", got "
        << m.rows() << "x" << m.cols();
    return msg.str();
  }
  if (!m.allFinite()) return "density matrix has non-finite entries";
  const double asym = (m - m.adjoint()).norm();
  if (asym > kStructuralTol) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian: ||M - M^dag||_F = " << asym;
    return msg.str();
  }
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > kStructuralTol) {
    std::ostringstream msg;
    msg << "density matrix trace is " << tr.real() << " (expected 1)";
    return msg.str();
  }
  const double min_eig = hermitian_eigenvalues(m).minCoeff();
  if (min_eig < -kStructuralTol) {
    std::ostringstream msg;
    msg << "density matrix is not positive semidefinite: smallest eigenvalue " << min_eig;
    return msg.str();
  }
  return std::nullopt;
}

DensityMatrix::DensityMatrix(int num_qubits, Matrix matrix)
    : num_qubits_(num_qubits), matrix_(std::move(matrix)) {
  if (auto why = density_violation(num_qubits_, matrix_)) throw std::invalid_argument(*why);
}

UnitaryMatrix::UnitaryMatrix(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || !is_power_of_two(matrix_.rows())) {
    throw std::invalid_argument("unitary must be square with power-of-two dimension");
  }
  const double residual =
      (matrix_ * matrix_.adjoint() - Matrix::Identity(matrix_.rows(), matrix_.cols())).norm();
  if (!(residual <= kDerivedTol)) {
    std::ostringstream msg;
    msg << "matrix is not unitary: ||U U^dag - I||_F = " << residual;
    throw std::invalid_argument(msg.str());
  }
}

UnitaryMatrix UnitaryMatrix::identity(Eigen::Index dim) { return UnitaryMatrix(Matrix::Identity(dim, dim)); }

UnitaryMatrix UnitaryMatrix::adjoint() const { return UnitaryMatrix(matrix_.adjoint()); }

PureState tensor_product(const PureState& a, const PureState& b) {
  const auto da = static_cast<Eigen::Index>(a.dim());
  const auto db = static_cast<Eigen::Index>(b.dim());
  Vector out(da * db);
  for (Eigen::Index i = 0; i < da; ++i) out.segment(i * db, db) = a.amplitudes()(i) * b.amplitudes();
  return PureState(a.num_qubits() + b.num_qubits(), std::move(out));
}

Complex overlap(const PureState& phi, const PureState& psi) {
  if (phi.num_qubits() != psi.num_qubits()) {
    throw std::invalid_argument("overlap: qubit counts differ (" + std::to_string(phi.num_qubits()) + " vs " +
                                std::to_string(psi.num_qubits()) + ")");
  }
  return phi.amplitudes().dot(psi.amplitudes());
}

DensityMatrix density_of(const PureState& psi) {
  return DensityMatrix(psi.num_qubits(), psi.amplitudes() * psi.amplitudes().adjoint());
}

namespace {

struct BlockDims {
  Eigen::Index hi, keep, lo;
};

BlockDims block_dims(int num_qubits, QubitBlock keep) {
  if (keep.count < 1 || keep.first < 0 || keep.first + keep.count > num_qubits) {
    std::ostringstream msg;
    msg << "invalid qubit block [" << keep.first << ", " << keep.first + keep.count << ") for " << num_qubits
        << " qubits";
    throw std::invalid_argument(msg.str());
  }
  return {Eigen::Index{1} << keep.first, Eigen::Index{1} << keep.count,
          Eigen::Index{1} << (num_qubits - keep.first - keep.count)};
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, QubitBlock keep) {
  const auto [hi, dk, lo] = block_dims(rho.num_qubits(), keep);
  const Matrix& m = rho.matrix();
  Matrix out = Matrix::Zero(dk, dk);
  for (Eigen::Index h = 0; h < hi; ++h) {
    for (Eigen::Index l = 0; l < lo; ++l) {
      for (Eigen::Index a = 0; a < dk; ++a) {
        const Eigen::Index row = (h * dk + a) * lo + l;
        for (Eigen::Index b = 0; b < dk; ++b) out(a, b) += m(row, (h * dk + b) * lo + l);
      }
    }
  }
  return DensityMatrix(keep.count, std::move(out));
}

DensityMatrix reduced_density(const PureState& psi, QubitBlock keep) {
  const auto [hi, dk, lo] = block_dims(psi.num_qubits(), keep);
  Matrix out = Matrix::Zero(dk, dk);
  // Each fixed (hi, lo) environment index contributes an outer product.
  Vector slice(dk);
  for (Eigen::Index h = 0; h < hi; ++h) {
    for (Eigen::Index l = 0; l < lo; ++l) {
      for (Eigen::Index a = 0; a < dk; ++a) slice(a) = psi.amplitudes()((h * dk + a) * lo + l);
      out.noalias() += slice * slice.adjoint();
    }
  }
  return DensityMatrix(keep.count, std::move(out));
}

Matrix psd_sqrt(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("psd_sqrt: matrix must be square");
  Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) throw std::domain_error("psd_sqrt: eigendecomposition failed");
  Eigen::VectorXd evals = solver.eigenvalues();
  const double floor = kSqrtNoiseFloor * std::max(evals.maxCoeff(), 0.0);
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    if (evals(i) < -kPsdClip) {
      std::ostringstream msg;
      msg << "psd_sqrt: eigenvalue " << evals(i) << " below -" << kPsdClip << "; input is not PSD";
      throw std::domain_error(msg.str());
    }
    evals(i) = evals(i) > floor ? std::sqrt(evals(i)) : 0.0;
  }
  const Matrix& v = solver.eigenvectors();
  return v * evals.asDiagonal() * v.adjoint();
}

Matrix matrix_sqrt(const DensityMatrix& rho) { return psd_sqrt(rho.matrix()); }

double trace_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("fidelity: dimension mismatch");
  const double root = trace_norm(matrix_sqrt(rho) * matrix_sqrt(sigma));
  return std::clamp(root * root, 0.0, 1.0);
}

bool equal_up_to_phase(const PureState& a, const PureState& b, double tol) {
  if (a.num_qubits() != b.num_qubits()) return false;
  const Complex ov = overlap(b, a);
  // Best phase aligns b with a: min_alpha ||a - e^{i alpha} b||^2 = 2 - 2|<b|a>|.
  const Complex phase = std::abs(ov) > 0 ? ov / std::abs(ov) : Complex{1.0, 0.0};
  return (a.amplitudes() - phase * b.amplitudes()).norm() <= tol;
}

PureState apply_single_qubit(const PureState& psi, int qubit, const Matrix2& op) {
  const int n = psi.num_qubits();
  if (qubit < 0 || qubit >= n) throw std::invalid_argument("apply_single_qubit: qubit index out of range");
  const std::uint64_t stride = std::uint64_t{1} << (n - 1 - qubit);
  Vector out = psi.amplitudes();
  for (std::uint64_t i = 0; i < psi.dim(); ++i) {
    if (i & stride) continue;
    const auto i0 = static_cast<Eigen::Index>(i);
    const auto i1 = static_cast<Eigen::Index>(i | stride);
    const Complex a0 = psi.amplitudes()(i0);
    const Complex a1 = psi.amplitudes()(i1);
    out(i0) = op(0, 0) * a0 + op(0, 1) * a1;
    out(i1) = op(1, 0) * a0 + op(1, 1) * a1;
  }
  return PureState(n, std::move(out));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace groverian
