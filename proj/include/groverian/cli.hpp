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

// Command-line front end. Subcommands:
//
//   grover run     --n N --marked i,j,... [--iterations K] [--initial FILE]
//   measure pure   --state FILE [--restarts R] [--tol X] [--max-sweeps S]
//   measure mixed  --state FILE [--terms M] [--restarts R] [--tol X]
//   purify         --state FILE [--out FILE]
//   verify fig2    --state FILE [--terms M] [--restarts R] [--marked I]
//   track          --n N --marked I [--max-iter K] [--initial FILE] [--out FILE]
//   werner         --p P [--out FILE]
//   ppt            --state FILE
//
// Global flags: --seed S, --threads T, --json.

#include <ostream>
#include <string>
#include <vector>

namespace groverian {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitNotConverged = 2;

/// Runs one invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace groverian
