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

#include "groverian/state_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace groverian {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw StateFormatError(where + ": " + what); }

Complex parse_pair(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail(where, "expected a [real, imaginary] pair of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json pair_of(Complex z) { return json::array({z.real(), z.imag()}); }

const json& field(const json& doc, const char* name) {
  if (!doc.contains(name)) fail(name, "missing field");
  return doc.at(name);
}

}  // namespace

AnyState parse_state(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw StateFormatError(std::string("parse error at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) fail("document", "expected a JSON object");

  const json& nq = field(doc, "num_qubits");
  if (!nq.is_number_integer() || nq.get<long long>() < 1 || nq.get<long long>() > kMaxQubits) {
    fail("num_qubits", "expected an integer in [1, " + std::to_string(kMaxQubits) + "]");
  }
  const int n = nq.get<int>();
  const Eigen::Index dim = Eigen::Index{1} << n;

  const json& kind = field(doc, "kind");
  if (!kind.is_string()) fail("kind", "expected \"pure\" or \"density\"");

  if (kind == "pure") {
    const json& amps = field(doc, "amplitudes");
    if (!amps.is_array()) fail("amplitudes", "expected an array of pairs");
    if (static_cast<Eigen::Index>(amps.size()) != dim) {
      fail("amplitudes", std::to_string(amps.size()) + " entries, expected " + std::to_string(dim));
    }
    Vector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      v(i) = parse_pair(amps[static_cast<std::size_t>(i)], "amplitudes[" + std::to_string(i) + "]");
    }
    try {
      return PureState(n, std::move(v));
    } catch (const std::invalid_argument& e) {
      fail("amplitudes", e.what());
    }
  }

  if (kind == "density") {
    const json& entries = field(doc, "matrix");
    if (!entries.is_array()) fail("matrix", "expected an array");
    Matrix m(dim, dim);
    const bool nested = !entries.empty() && entries[0].is_array() && !entries[0].empty() && entries[0][0].is_array();
    if (nested) {
      if (static_cast<Eigen::Index>(entries.size()) != dim) {
        fail("matrix", std::to_string(entries.size()) + " rows, expected " + std::to_string(dim));
      }
      for (Eigen::Index r = 0; r < dim; ++r) {
        const json& row = entries[static_cast<std::size_t>(r)];
        const std::string where = "matrix[" + std::to_string(r) + "]";
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
          fail(where, "row is not of length " + std::to_string(dim));
        }
        for (Eigen::Index c = 0; c < dim; ++c) {
          m(r, c) = parse_pair(row[static_cast<std::size_t>(c)], where + "[" + std::to_string(c) + "]");
        }
      }
    } else {
      if (static_cast<Eigen::Index>(entries.size()) != dim * dim) {
        fail("matrix", std::to_string(entries.size()) + " entries do not form a " + std::to_string(dim) + "x" +
                           std::to_string(dim) + " matrix");
      }
      for (Eigen::Index i = 0; i < dim * dim; ++i) {
        m(i / dim, i % dim) = parse_pair(entries[static_cast<std::size_t>(i)], "matrix[" + std::to_string(i) + "]");
      }
    }
    if (auto violation = density_violation(n, m)) fail("matrix", *violation);
    return DensityMatrix(n, std::move(m));
  }

  fail("kind", "expected \"pure\" or \"density\", got " + kind.dump());
}

AnyState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StateFormatError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_state(buffer.str());
  } catch (const StateFormatError& e) {
    throw StateFormatError(path + ": " + e.what());
  }
}

DensityMatrix as_density(const AnyState& state) {
  if (const auto* psi = std::get_if<PureState>(&state)) return density_of(*psi);
  return std::get<DensityMatrix>(state);
}

std::string serialize_state(const PureState& psi) {
  json amps = json::array();
  for (Eigen::Index i = 0; i < psi.amplitudes().size(); ++i) amps.push_back(pair_of(psi.amplitudes()(i)));
  json doc = {{"num_qubits", psi.num_qubits()}, {"kind", "pure"}, {"amplitudes", std::move(amps)}};
  return doc.dump() + "\n";
}

std::string serialize_state(const DensityMatrix& rho) {
  json entries = json::array();
  for (Eigen::Index r = 0; r < rho.dim(); ++r) {
    for (Eigen::Index c = 0; c < rho.dim(); ++c) entries.push_back(pair_of(rho.matrix()(r, c)));
  }
  json doc = {{"num_qubits", rho.num_qubits()}, {"kind", "density"}, {"matrix", std::move(entries)}};
  return doc.dump() + "\n";
}

void write_state_file(const std::string& path, const AnyState& state) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << std::visit([](const auto& s) { return serialize_state(s); }, state);
  if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace groverian
