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

// Measures the O(1/N) constants of Grover's algorithm that the tests and the
// CLI use as tolerances. The printed values are frozen in
// include/groverian/calibration.hpp.
//
//   state constant:   max sqrt(N) || U_G^dag |m> - |eta> ||
//   success constant: max N | P_success(psi) - |<eta|psi>|^2 |
//
// Both are reported with a safety factor of two.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "CLI11.hpp"
#include "groverian/grover.hpp"
#include "groverian/random.hpp"

int main(int argc, char** argv) {
  using namespace groverian;
  CLI::App app{"Calibrate the Grover error constants"};
  int samples = 1000;
  std::uint64_t seed = 20260101;
  std::vector<int> sizes{6, 8, 10};
  app.add_option("--samples", samples, "random states per register size");
  app.add_option("--seed", seed);
  app.add_option("--sizes", sizes, "register sizes in qubits");
  CLI11_PARSE(app, argc, argv);

  double state_max = 0.0;
  double success_max = 0.0;
  Rng rng(seed);
  for (int n : sizes) {
    const double dim = std::ldexp(1.0, n);
    const int k = optimal_iterations(n, 1);
    double state_n = 0.0;
    for (std::uint64_t m = 0; m < static_cast<std::uint64_t>(dim); m += std::max<std::uint64_t>(1, static_cast<std::uint64_t>(dim) / 8)) {
      const Oracle oracle(n, {m});
      const PureState back = grover_adjoint_apply(PureState::basis(n, m), oracle, k);
      state_n = std::max(state_n, std::sqrt(dim) * (back.amplitudes() - uniform_state(n).amplitudes()).norm());
    }
    double success_n = 0.0;
    for (int s = 0; s < samples; ++s) {
      const double gamma = 0.5 * std::numbers::pi * rng.uniform();
      const PureState psi = state_with_uniform_overlap(n, gamma, rng);
      const Oracle oracle(n, {rng.below(static_cast<std::uint64_t>(dim))});
      const double measured = grover_run(psi, oracle, k).success_probability;
      success_n = std::max(success_n, dim * std::abs(measured - predicted_success(psi)));
    }
    std::printf("n=%2d  k=%3d  sqrt(N)*state_err=%.6f  N*success_err=%.6f\n", n, k, state_n, success_n);
    state_max = std::max(state_max, state_n);
    success_max = std::max(success_max, success_n);
  }
  std::printf("state constant   c  = %.6f\n", 2.0 * state_max);
  std::printf("success constant c' = %.6f\n", 2.0 * success_max);
  return 0;
}
