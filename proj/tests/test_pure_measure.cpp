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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "groverian/calibration.hpp"
#include "groverian/pure_measure.hpp"
#include "groverian/random.hpp"
#include "oracles.hpp"

using namespace groverian;

namespace {

// Swaps qubits a and b of psi.
PureState swap_qubits(const PureState& psi, int a, int b) {
  const int n = psi.num_qubits();
  Vector out(psi.amplitudes().size());
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    const std::size_t ba = (i >> (n - 1 - a)) & 1U;
    const std::size_t bb = (i >> (n - 1 - b)) & 1U;
    std::size_t j = i & ~((std::size_t{1} << (n - 1 - a)) | (std::size_t{1} << (n - 1 - b)));
    j |= (ba << (n - 1 - b)) | (bb << (n - 1 - a));
    out(static_cast<Eigen::Index>(j)) = psi[i];
  }
  return PureState(n, out);
}

}  // namespace

TEST_CASE("bloch angles") {
  const ProductStateParams zero = ProductStateParams::uniform(2, {0.0, 0.0});
  CHECK(std::abs(product_state(zero)[0] - 1.0) < 1e-15);
  const ProductStateParams plus = ProductStateParams::uniform(3, {std::numbers::pi / 2, 0.0});
  CHECK((product_state(plus).amplitudes() - uniform_state(3).amplitudes()).norm() < 1e-14);
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const Vector2 q = haar_state(1, rng).amplitudes();
    const BlochAngles a = ProductStateParams::angles_of(q);
    const Vector2 back = ProductStateParams({a}).qubit_state(0);
    CHECK(std::abs(std::abs(back.dot(q)) - 1.0) < 1e-12);
  }
  const ProductStateParams wild({{-1.0, 9.0}, {4.0, -2.0}});
  const ProductStateParams c = wild.canonical();
  for (const auto& a : c.angles()) {
    CHECK(a.theta >= 0.0);
    CHECK(a.theta <= std::numbers::pi);
    CHECK(a.phi >= 0.0);
    CHECK(a.phi < 2 * std::numbers::pi);
  }
  CHECK(equal_up_to_phase(product_state(wild), product_state(c), 1e-12));
}

TEST_CASE("contraction equals the best single-qubit overlap") {
  Rng rng(2);
  const PureState psi = haar_state(4, rng);
  std::vector<Vector2> qubits;
  for (int k = 0; k < 4; ++k) qubits.push_back(haar_state(1, rng).amplitudes());
  for (int k = 0; k < 4; ++k) {
    const Vector2 c = contract_except(psi.amplitudes(), 4, qubits, k);
    // Overlap with the product state for two choices of qubit k.
    for (int choice = 0; choice < 2; ++choice) {
      auto q = qubits;
      q[static_cast<std::size_t>(k)] = Vector2::Unit(choice);
      Vector prod = Vector::Ones(1);
      for (const auto& v : q) {
        Vector next(prod.size() * 2);
        for (Eigen::Index i = 0; i < prod.size(); ++i) {
          next(2 * i) = prod(i) * v(0);
          next(2 * i + 1) = prod(i) * v(1);
        }
        prod = next;
      }
      CHECK(std::abs(prod.dot(psi.amplitudes()) - c(choice)) < 1e-13);
    }
  }
}

TEST_CASE("local update never lowers the objective") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const PureState psi = haar_state(5, rng);
    ProductStateParams p = ProductStateParams::uniform(5, {rng.uniform() * 3, rng.uniform() * 6});
    double last = overlap_objective(psi, p);
    for (int sweep = 0; sweep < 5; ++sweep) {
      for (int k = 0; k < 5; ++k) {
        p = local_update(psi, p, k);
        const double now = overlap_objective(psi, p);
        CHECK(now >= last - 1e-12);
        last = now;
      }
    }
  }
}

TEST_CASE("known values") {
  Rng rng(4);
  for (int n = 2; n <= 6; ++n) {
    const PureMeasureResult r = p_max_pure(oracle::random_product(n, rng));
    CHECK(r.g <= 1e-9);
  }
  for (int n = 2; n <= 5; ++n) {
    const PureMeasureResult r = p_max_pure(PureState::normalized(n, oracle::ghz(n)));
    CHECK(r.g == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-6));
  }
  const PureMeasureResult w = p_max_pure(PureState::normalized(3, oracle::w_state(3)));
  CHECK(w.p_max == doctest::Approx(4.0 / 9.0).epsilon(1e-6));
  CHECK(w.g * w.g + w.p_max == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("grid oracle confirms the reference values") {
  CHECK(grid_oracle_pure(PureState::normalized(2, oracle::ghz(2)), 33) == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(grid_oracle_pure(PureState::normalized(3, oracle::ghz(3)), 17) == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(grid_oracle_pure(PureState::normalized(3, oracle::w_state(3)), 17) == doctest::Approx(4.0 / 9.0).epsilon(1e-8));
  CHECK_THROWS_AS(grid_oracle_pure(uniform_state(4), 8), std::invalid_argument);
}

TEST_CASE("optimizer agrees with the grid oracle on random states") {
  Rng rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    const PureState psi = haar_state(2, rng);
    CHECK(std::abs(p_max_pure(psi).p_max - grid_oracle_pure(psi, 24)) <= 1e-4);
  }
}

TEST_CASE("range, permutation invariance and determinism") {
  Rng rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const PureState psi = haar_state(4, rng);
    const PureMeasureResult r = p_max_pure(psi);
    CHECK(r.p_max <= 1.0);
    CHECK(r.p_max >= psi.amplitudes().cwiseAbs2().maxCoeff() - 1e-12);
    CHECK(r.p_max >= 1.0 / 16.0);
    CHECK(r.p_max == doctest::Approx(p_max_pure(swap_qubits(psi, 0, 3)).p_max).epsilon(1e-6));
    PureMeasureConfig threaded;
    threaded.threads = 4;
    const PureMeasureResult t = p_max_pure(psi, threaded);
    CHECK(t.p_max == r.p_max);
    CHECK(t.diagnostics.iterations == r.diagnostics.iterations);
  }
}

TEST_CASE("align_to_plus maps the qubit state to |+>") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const BlochAngles a{std::acos(1 - 2 * rng.uniform()), 2 * std::numbers::pi * rng.uniform()};
    const Matrix2 u = align_to_plus(a);
    CHECK((u * u.adjoint() - Matrix2::Identity()).norm() < 1e-12);
    const Vector2 mapped = u * ProductStateParams({a}).qubit_state(0);
    CHECK(std::abs(mapped(0) - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(mapped(1) - 1.0 / std::sqrt(2.0)) < 1e-12);
  }
}

TEST_CASE("circuit with local pre-processing reproduces the maximal overlap") {
  const PureState ghz3 = PureState::normalized(3, oracle::ghz(3));
  const PureMeasureResult r = p_max_pure(ghz3);
  CHECK(std::abs(fig1_success(ghz3, r.best_params, Oracle(3, {5})) - 0.5) <= 0.15);
  Rng rng(8);
  for (int n : {6, 8}) {
    const PureState psi = haar_state(n, rng);
    const PureMeasureResult m = p_max_pure(psi);
    const double dim = std::ldexp(1.0, n);
    const double measured = fig1_success(psi, m.best_params, Oracle(n, {rng.below(static_cast<std::uint64_t>(dim))}));
    CHECK(std::abs(measured - m.p_max) <= kSuccessErrorConstant / dim);
  }
}
