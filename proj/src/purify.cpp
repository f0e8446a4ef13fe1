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

#include "groverian/purify.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace groverian {
namespace {

// Amplitudes as a 2^n x 2^n matrix, row = reference index.
Matrix as_block_matrix(const PureState& state, Eigen::Index dim) {
  Matrix out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) out.row(r) = state.amplitudes().segment(r * dim, dim).transpose();
  return out;
}

PureState from_block_matrix(int total_qubits, const Matrix& amps) {
  const Eigen::Index dim = amps.rows();
  Vector v(dim * dim);
  for (Eigen::Index r = 0; r < dim; ++r) v.segment(r * dim, dim) = amps.row(r).transpose();
  return PureState::normalized(total_qubits, std::move(v));
}

void check_same_size(const DensityMatrix& a, const DensityMatrix& b, const char* what) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument(std::string(what) + ": states have " + std::to_string(a.num_qubits()) + " and " +
                                std::to_string(b.num_qubits()) + " qubits");
  }
}

}  // namespace

Purification purify(const DensityMatrix& rho, const UnitaryMatrix& u_r, const UnitaryMatrix& u_q) {
  if (u_r.dim() != rho.dim() || u_q.dim() != rho.dim()) {
    throw std::invalid_argument("purify: unitaries must have dimension " + std::to_string(rho.dim()));
  }
  const Matrix a = matrix_sqrt(rho) * u_q.matrix();
  const Matrix amps = u_r.matrix() * a.transpose();
  return Purification{rho, from_block_matrix(2 * rho.num_qubits(), amps)};
}

Purification purify(const DensityMatrix& rho) {
  const Matrix amps = matrix_sqrt(rho).transpose();
  return Purification{rho, from_block_matrix(2 * rho.num_qubits(), amps)};
}

Purification ensemble_purification(const SeparableEnsemble& ensemble) {
  const int n = ensemble.num_qubits();
  const Eigen::Index dim = Eigen::Index{1} << n;
  if (ensemble.num_terms() > dim) {
    throw std::invalid_argument("ensemble_purification: " + std::to_string(ensemble.num_terms()) +
                                " terms do not fit a " + std::to_string(n) + "-qubit reference register");
  }
  Matrix amps = Matrix::Zero(dim, dim);
  for (int mu = 0; mu < ensemble.num_terms(); ++mu) {
    const double w = ensemble.weights()[static_cast<std::size_t>(mu)];
    amps.row(mu) = std::sqrt(w) * product_state(ensemble.terms()[static_cast<std::size_t>(mu)]).amplitudes().transpose();
  }
  return Purification{ensemble_to_density(ensemble), from_block_matrix(2 * n, amps)};
}

DensityMatrix trace_out_reference(const PureState& state) {
  if (state.num_qubits() % 2 != 0) throw std::invalid_argument("trace_out_reference: odd qubit count");
  const int n = state.num_qubits() / 2;
  return reduced_density(state, QubitBlock{n, n});
}

PureState hadamard_basis_state(std::uint64_t index, int total_qubits) {
  if (total_qubits < 1 || total_qubits > kMaxQubits) {
    throw std::invalid_argument("hadamard_basis_state: qubit count out of range");
  }
  const std::uint64_t dim = std::uint64_t{1} << total_qubits;
  if (index >= dim) throw std::invalid_argument("hadamard_basis_state: index " + std::to_string(index) + " out of range");
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  Vector v(static_cast<Eigen::Index>(dim));
  for (std::uint64_t j = 0; j < dim; ++j) {
    v(static_cast<Eigen::Index>(j)) = (std::popcount(index & j) % 2 == 0) ? scale : -scale;
  }
  return PureState(total_qubits, std::move(v));
}

std::vector<PureState> gram_schmidt_complete(const PureState& phi0) {
  const Eigen::Index dim = static_cast<Eigen::Index>(phi0.dim());
  std::vector<Vector> basis{phi0.amplitudes()};
  basis.reserve(static_cast<std::size_t>(dim));
  for (Eigen::Index c = 0; c < dim && static_cast<Eigen::Index>(basis.size()) < dim; ++c) {
    Vector v = Vector::Unit(dim, c);
    // Two projection passes keep the result orthogonal to working precision.
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vector& b : basis) v -= b.dot(v) * b;
    }
    const double norm = v.norm();
    if (norm < 1e-8) continue;
    basis.push_back(v / norm);
  }
  std::vector<PureState> out;
  out.reserve(basis.size());
  out.push_back(phi0);
  for (std::size_t i = 1; i < basis.size(); ++i) out.emplace_back(phi0.num_qubits(), std::move(basis[i]));
  return out;
}

UnitaryMatrix build_u_phi(const PureState& phi) {
  const std::vector<PureState> basis = gram_schmidt_complete(phi);
  const Eigen::Index dim = static_cast<Eigen::Index>(phi.dim());
  Matrix cols(dim, dim);
  Matrix hadamard(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    cols.col(i) = basis[static_cast<std::size_t>(i)].amplitudes();
    hadamard.col(i) = hadamard_basis_state(static_cast<std::uint64_t>(i), phi.num_qubits()).amplitudes();
  }
  // U_phi^dag = Phi H^dag, hence U_phi = H Phi^dag.
  return UnitaryMatrix(hadamard * cols.adjoint());
}

double uhlmann_max_overlap(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_same_size(rho, sigma, "uhlmann_max_overlap");
  const Eigen::Index dim = rho.dim();
  const Matrix psi = as_block_matrix(purify(rho).state, dim);
  const Matrix phi0 = as_block_matrix(purify(sigma).state, dim);
  // <(V (x) I) phi0 | psi> = Tr(V^dag C) with C = Psi Phi0^dag.
  const Matrix c = psi * phi0.adjoint();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(c.adjoint() * c, Eigen::EigenvaluesOnly);
  // Eigenvalues below this are rounding noise from forming C^dag C.
  const double cutoff = 1e-13 * solver.eigenvalues().maxCoeff();
  double norm = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (solver.eigenvalues()(i) > cutoff) norm += std::sqrt(solver.eigenvalues()(i));
  }
  return std::clamp(norm * norm, 0.0, 1.0);
}

Purification align_purification(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_same_size(rho, sigma, "align_purification");
  const Eigen::Index dim = rho.dim();
  const Matrix psi = as_block_matrix(purify(rho).state, dim);
  const Matrix phi0 = as_block_matrix(purify(sigma).state, dim);
  Eigen::JacobiSVD<Matrix> svd(psi * phi0.adjoint(), Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Matrix v = svd.matrixU() * svd.matrixV().adjoint();
  return Purification{sigma, from_block_matrix(2 * rho.num_qubits(), v * phi0)};
}

}  // namespace groverian
