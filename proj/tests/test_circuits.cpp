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
#include <sstream>

#include "doctest.h"
#include "groverian/circuits.hpp"
#include "groverian/random.hpp"
#include "oracles.hpp"

using namespace groverian;

TEST_CASE("purified search with an exact separable ensemble") {
  const SeparableEnsemble zero({1.0}, {ProductStateParams::uniform(2, {0.0, 0.0})});
  const Fig2Outcome aligned = fig2_run(density_of(PureState::basis(2, 0)), zero);
  CHECK(aligned.overlap == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(aligned.success >= 1.0 - fig2_tolerance(2));
  CHECK(aligned.iterations == optimal_iterations(4, 1));
  Rng rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const SeparableEnsemble e = oracle::random_ensemble(2, 1 + trial % 4, rng);
    const Fig2Outcome r = fig2_run(ensemble_to_density(e), e, rng.below(16));
    CHECK(r.overlap <= 1.0 + 1e-12);
    CHECK(r.success >= r.overlap - fig2_tolerance(2));
  }
  CHECK_THROWS_AS(fig2_run(random_density(3, rng), zero), std::invalid_argument);
}

TEST_CASE("purified search overlap does not depend on the marked index") {
  Rng rng(7);
  const SeparableEnsemble e = oracle::random_ensemble(2, 3, rng);
  const DensityMatrix rho = ensemble_to_density(e);
  const Fig2Outcome first = fig2_run(rho, e, 0);
  for (std::uint64_t marked = 1; marked < 16; ++marked) {
    const Fig2Outcome r = fig2_run(rho, e, marked);
    CHECK(r.overlap == doctest::Approx(first.overlap).epsilon(1e-12));
    CHECK(r.success >= r.overlap - fig2_tolerance(2));
  }
}

TEST_CASE("optimal purified search") {
  const Fig2Optimum mixed = fig2_optimal_success(DensityMatrix(2, Matrix::Identity(4, 4) / 4.0));
  CHECK(mixed.value == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(mixed.g <= 1e-4);
  CHECK(mixed.within_tolerance);
  const Fig2Optimum bell = fig2_optimal_success(density_of(PureState::normalized(2, oracle::ghz(2))));
  CHECK(std::abs(bell.value - 0.5) <= 1e-3);
  CHECK(std::abs(bell.g - 1.0 / std::sqrt(2.0)) <= 1e-3);
  CHECK(bell.within_tolerance);
  const DensityMatrix w = werner_state(0.8);
  const Fig2Optimum werner = fig2_optimal_success(w);
  const double g = groverian_mixed(w).g;
  CHECK(std::abs(werner.value - (1.0 - g * g)) <= 3e-4);
}

TEST_CASE("entanglement along the Grover iterations") {
  for (int n : {5, 6, 7}) {
    const int k = optimal_iterations(n, 1);
    const auto records = track_groverian(n, 3, uniform_state(n), k);
    REQUIRE(records.size() == static_cast<std::size_t>(k + 1));
    CHECK(records.front().groverian <= 1e-6);
    CHECK(records.front().success_probability == doctest::Approx(std::ldexp(1.0, -n)));
    double peak = 0.0;
    for (const auto& r : records) {
      CHECK(r.groverian >= 0.0);
      CHECK(r.groverian <= 1.0);
      CHECK(r.success_probability <= 1.0);
      peak = std::max(peak, r.groverian);
    }
    CHECK(peak >= 0.2);
    // The final state is close to a basis state: G^2 <= 1 - success.
    CHECK(records.back().groverian <= std::sqrt(1.0 - records.back().success_probability) + 1e-9);
  }
  CHECK_THROWS_AS(track_groverian(9, 0, uniform_state(9), 1), std::invalid_argument);
  CHECK_THROWS_AS(track_groverian(4, 0, uniform_state(5), 1), std::invalid_argument);
}

TEST_CASE("track CSV format") {
  const auto records = track_groverian(3, 1, uniform_state(3), 2);
  std::ostringstream out;
  write_track_csv(out, records);
  const std::string text = out.str();
  CHECK(text.rfind("t,success,G\n", 0) == 0);
  CHECK(text.find('\r') == std::string::npos);
  std::istringstream in(text);
  std::string line;
  int rows = -1;
  while (std::getline(in, line)) {
    if (rows >= 0) CHECK(std::count(line.begin(), line.end(), ',') == 2);
    ++rows;
  }
  CHECK(rows == 3);
}
