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

// JSON state files:
//
//   {"num_qubits": 1, "kind": "pure",    "amplitudes": [[re, im], [re, im]]}
//   {"num_qubits": 1, "kind": "density", "matrix": [[re, im], ... 4 pairs]}
//
// Matrices are written as a flat row-major list of pairs; nested rows are
// accepted on input.

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "groverian/qstate.hpp"

namespace groverian {

/// Malformed or invalid state file. The message names the offending field.
class StateFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using AnyState = std::variant<PureState, DensityMatrix>;

AnyState parse_state(std::string_view text);
AnyState read_state_file(const std::string& path);

/// Pure states become their projector.
DensityMatrix as_density(const AnyState& state);

std::string serialize_state(const PureState& psi);
std::string serialize_state(const DensityMatrix& rho);
void write_state_file(const std::string& path, const AnyState& state);

}  // namespace groverian
