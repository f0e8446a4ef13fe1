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

// Frozen O(1/N) constants of Grover's algorithm, measured by
// tools/calibrate_grover (single marked state, optimal iteration count,
// n = 6, 8, 10, 1000 random states per size, seed 20260101) and rounded up.
// The values already include a safety factor of two.

namespace groverian {

/// || U_G^dag |m> - |eta> || <= kStateErrorConstant / sqrt(N).
/// Measured 1.485611.
inline constexpr double kStateErrorConstant = 1.49;

/// | P_success(psi) - |<eta|psi>|^2 | <= kSuccessErrorConstant / N.
/// Measured 4.099567.
inline constexpr double kSuccessErrorConstant = 4.10;

}  // namespace groverian
