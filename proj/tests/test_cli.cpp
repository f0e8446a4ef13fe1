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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "groverian/cli.hpp"
#include "groverian/state_io.hpp"

using namespace groverian;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream(path) << contents;
  return path;
}

double value_of(const std::string& text, const std::string& key) {
  const auto pos = text.find(key + "=");
  REQUIRE(pos != std::string::npos);
  return std::stod(text.substr(pos + key.size() + 1));
}

}  // namespace

TEST_CASE("grover run") {
  const Result r = run({"grover", "run", "--n", "10", "--marked", "77"});
  CHECK(r.code == kExitOk);
  CHECK(value_of(r.out, "iterations") == 25);
  CHECK(value_of(r.out, "success") >= 0.999);
  CHECK(value_of(r.out, "predicted") == doctest::Approx(1.0));
  const Result multi = run({"grover", "run", "--n", "6", "--marked", "1,2,3", "--iterations", "0"});
  CHECK(value_of(multi.out, "success") == doctest::Approx(3.0 / 64.0));
  CHECK(run({"grover", "run", "--n", "3", "--marked", "9"}).code == kExitInvalidInput);
}

TEST_CASE("measure pure") {
  const std::string bell =
      temp_file("groverian_cli_bell.json",
                R"({"num_qubits": 2, "kind": "pure", "amplitudes": [[0.7071067811865476, 0], [0, 0], [0, 0], [0.7071067811865476, 0]]})");
  const Result r = run({"measure", "pure", "--state", bell});
  CHECK(r.code == kExitOk);
  CHECK(value_of(r.out, "p_max") == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(value_of(r.out, "G") == doctest::Approx(0.70711).epsilon(1e-5));
  const Result a = run({"--json", "--seed", "5", "measure", "pure", "--state", bell});
  const Result b = run({"measure", "pure", "--state", bell, "--seed", "5", "--json", "--threads", "3"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out.front() == '{');
  const Result few = run({"measure", "pure", "--state", bell, "--max-sweeps", "1", "--tol", "1e-300"});
  CHECK(few.code == kExitNotConverged);
  CHECK(few.out.find("warning=") != std::string::npos);
  std::remove(bell.c_str());
}

TEST_CASE("invalid input") {
  const std::string nonsquare =
      temp_file("groverian_cli_nonsquare.json", R"({"num_qubits": 1, "kind": "density", "matrix": [[1, 0], [0, 0], [0, 0]]})");
  const Result r = run({"measure", "mixed", "--state", nonsquare});
  CHECK(r.code == kExitInvalidInput);
  CHECK(r.err.find("matrix") != std::string::npos);
  CHECK(r.err.find(nonsquare) != std::string::npos);
  std::remove(nonsquare.c_str());
  CHECK(run({"bogus"}).code == kExitInvalidInput);
  CHECK(run({}).code == kExitInvalidInput);
  CHECK(run({"measure", "pure", "--state", "/nonexistent/file.json"}).code == kExitInvalidInput);
  CHECK(run({"werner", "--p", "2"}).code == kExitInvalidInput);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("werner, ppt, mixed measure and fig2 verification") {
  const auto path = (std::filesystem::temp_directory_path() / "groverian_cli_werner.json").string();
  CHECK(run({"werner", "--p", "0.8", "--out", path}).code == kExitOk);
  const Result ppt = run({"ppt", "--state", path});
  CHECK(ppt.out.find("ppt=false") != std::string::npos);
  CHECK(value_of(ppt.out, "min_eigenvalue") == doctest::Approx(-0.35));
  const Result mixed = run({"measure", "mixed", "--state", path, "--restarts", "8"});
  CHECK(mixed.code == kExitOk);
  const double g = value_of(mixed.out, "G");
  const Result fig2 = run({"verify", "fig2", "--state", path, "--restarts", "8"});
  CHECK(fig2.code == kExitOk);
  CHECK(std::abs(value_of(fig2.out, "value") - (1.0 - g * g)) <= 3e-4);
  CHECK(fig2.out.find("within_tolerance=true") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("purify emits a state file") {
  const std::string rho =
      temp_file("groverian_cli_mixed.json", R"({"num_qubits": 1, "kind": "density", "matrix": [[0.5, 0], [0, 0], [0, 0], [0.5, 0]]})");
  const Result r = run({"purify", "--state", rho});
  CHECK(r.code == kExitOk);
  const PureState psi = std::get<PureState>(parse_state(r.out));
  CHECK(psi.num_qubits() == 2);
  CHECK(std::abs(psi[3] - 1.0 / std::sqrt(2.0)) < 1e-12);
  std::remove(rho.c_str());
}

TEST_CASE("track writes CSV") {
  const auto path = (std::filesystem::temp_directory_path() / "groverian_cli_track.csv").string();
  const Result r = run({"track", "--n", "4", "--marked", "2", "--max-iter", "3", "--out", path});
  CHECK(r.code == kExitOk);
  CHECK(value_of(r.out, "rows") == 4);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,success,G");
  std::remove(path.c_str());
  const Result inline_csv = run({"track", "--n", "3", "--marked", "0", "--max-iter", "1"});
  CHECK(inline_csv.out.rfind("t,success,G\n0,0.125,", 0) == 0);
}
