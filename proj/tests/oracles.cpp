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

#include "oracles.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace oracle {

Matrix partial_trace(const Matrix& rho, int num_qubits, int first, int count) {
  const int rest = num_qubits - count;
  const Eigen::Index keep_dim = Eigen::Index{1} << count;
  const std::uint64_t rest_dim = std::uint64_t{1} << rest;
  const int low = num_qubits - first - count;  // qubits below the kept block
  Matrix out = Matrix::Zero(keep_dim, keep_dim);
  auto index = [&](std::uint64_t kept, std::uint64_t other) {
    const std::uint64_t low_bits = other & ((std::uint64_t{1} << low) - 1);
    const std::uint64_t high_bits = other >> low;
    return static_cast<Eigen::Index>((high_bits << (count + low)) | (kept << low) | low_bits);
  };
  for (Eigen::Index a = 0; a < keep_dim; ++a) {
    for (Eigen::Index b = 0; b < keep_dim; ++b) {
      Complex s = 0.0;
      for (std::uint64_t o = 0; o < rest_dim; ++o) {
        s += rho(index(static_cast<std::uint64_t>(a), o), index(static_cast<std::uint64_t>(b), o));
      }
      out(a, b) = s;
    }
  }
  return out;
}

double trace_norm(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m.adjoint() * m, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) s += std::sqrt(std::max(0.0, solver.eigenvalues()(i)));
  return s;
}

namespace {

Matrix hermitian_sqrt(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (m + m.adjoint()));
  Eigen::VectorXd roots = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return solver.eigenvectors() * roots.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace

double fidelity(const Matrix& rho, const Matrix& sigma) {
  const Matrix r = hermitian_sqrt(rho);
  const Matrix inner = r * sigma * r;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (inner + inner.adjoint()), Eigen::EigenvaluesOnly);
  // Eigenvalues this close to zero are rounding noise; their square roots
  // would otherwise contribute ~1e-8 each.
  const double cutoff = 1e-13 * solver.eigenvalues().maxCoeff();
  double s = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    if (solver.eigenvalues()(i) > cutoff) s += std::sqrt(solver.eigenvalues()(i));
  }
  return s * s;
}

double grover_success(int num_qubits, const std::vector<std::uint64_t>& marked, int k) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  std::vector<Complex> a(dim, Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
  for (int it = 0; it < k; ++it) {
    for (auto m : marked) a[m] = -a[m];
    Complex mean = 0.0;
    for (const auto& x : a) mean += x;
    mean /= static_cast<double>(dim);
    for (auto& x : a) x = 2.0 * mean - x;
  }
  double p = 0.0;
  for (auto m : marked) p += std::norm(a[m]);
  return p;
}

int scan_optimal_iterations(int num_qubits, const std::vector<std::uint64_t>& marked, int k_max) {
  // First peak of the success curve.
  int k = 0;
  double p = grover_success(num_qubits, marked, 0);
  while (k < k_max) {
    const double next = grover_success(num_qubits, marked, k + 1);
    if (next <= p) break;
    p = next;
    ++k;
  }
  return k;
}

double min_partial_transpose_eigenvalue(const Matrix& rho) {
  Matrix pt(4, 4);
  for (int a0 = 0; a0 < 2; ++a0)
    for (int a1 = 0; a1 < 2; ++a1)
      for (int b0 = 0; b0 < 2; ++b0)
        for (int b1 = 0; b1 < 2; ++b1) pt(2 * a0 + a1, 2 * b0 + b1) = rho(2 * a0 + b1, 2 * b0 + a1);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(pt, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

Vector ghz(int num_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  Vector v = Vector::Zero(dim);
  v(0) = v(dim - 1) = 1.0 / std::sqrt(2.0);
  return v;
}

Vector w_state(int num_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  Vector v = Vector::Zero(dim);
  for (int k = 0; k < num_qubits; ++k) v(Eigen::Index{1} << k) = 1.0 / std::sqrt(static_cast<double>(num_qubits));
  return v;
}

groverian::SeparableEnsemble random_ensemble(int num_qubits, int terms, groverian::Rng& rng) {
  std::vector<double> weights;
  std::vector<groverian::ProductStateParams> params;
  double total = 0.0;
  for (int t = 0; t < terms; ++t) {
    const double w = rng.uniform() + 1e-3;
    weights.push_back(w);
    total += w;
    std::vector<groverian::BlochAngles> angles;
    for (int k = 0; k < num_qubits; ++k) {
      angles.push_back({std::acos(1.0 - 2.0 * rng.uniform()), 2.0 * std::numbers::pi * rng.uniform()});
    }
    params.emplace_back(std::move(angles));
  }
  for (auto& w : weights) w /= total;
  return groverian::SeparableEnsemble(std::move(weights), std::move(params));
}

groverian::PureState random_product(int num_qubits, groverian::Rng& rng) {
  Vector v = Vector::Ones(1);
  for (int k = 0; k < num_qubits; ++k) {
    const Vector q = groverian::haar_state(1, rng).amplitudes();
    Vector next(v.size() * 2);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      next(2 * i) = v(i) * q(0);
      next(2 * i + 1) = v(i) * q(1);
    }
    v = next;
  }
  return groverian::PureState::normalized(num_qubits, v);
}

}  // namespace oracle
