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

#include "doctest.h"
#include "groverian/random.hpp"

using namespace groverian;

TEST_CASE("same seed gives the same stream") {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  Rng c(43);
  CHECK(Rng(42).next_u64() != c.next_u64());
}

TEST_CASE("fork depends only on the parent seed") {
  Rng a(7);
  Rng b(7);
  for (int i = 0; i < 10; ++i) b.next_u64();
  Rng fa = a.fork(3);
  Rng fb = b.fork(3);
  CHECK(fa.next_u64() == fb.next_u64());
  CHECK(a.fork(3).next_u64() != a.fork(4).next_u64());
}

TEST_CASE("uniform, below and normal") {
  Rng rng(1);
  double sum = 0.0;
  double sq = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(rng.below(7) < 7);
    const double z = rng.normal();
    sum += z;
    sq += z * z;
  }
  CHECK(std::abs(sum / 20000) < 0.05);
  CHECK(std::abs(sq / 20000 - 1.0) < 0.05);
}

TEST_CASE("random objects satisfy their invariants") {
  Rng rng(2);
  for (int n = 1; n <= 4; ++n) {
    CHECK(haar_state(n, rng).amplitudes().norm() == doctest::Approx(1.0));
    const Matrix u = random_unitary(Eigen::Index{1} << n, rng);
    CHECK((u * u.adjoint() - Matrix::Identity(u.rows(), u.rows())).norm() < 1e-12);
    const DensityMatrix rho = random_density(n, rng, 1);
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix(), Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().maxCoeff() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("state with a prescribed overlap with the uniform superposition") {
  Rng rng(5);
  for (double gamma : {0.0, 0.3, 1.0, 1.5}) {
    const PureState psi = state_with_uniform_overlap(6, gamma, rng);
    const Complex s = psi.amplitudes().sum() / 8.0;
    CHECK(std::norm(s) == doctest::Approx(std::cos(gamma) * std::cos(gamma)).epsilon(1e-12));
  }
}
