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

#include "groverian/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "groverian/circuits.hpp"
#include "groverian/detail/parallel.hpp"
#include "groverian/grover.hpp"
#include "groverian/mixed_measure.hpp"
#include "groverian/pure_measure.hpp"
#include "groverian/purify.hpp"
#include "groverian/state_io.hpp"
#include "json.hpp"

namespace groverian {
namespace {

using Json = nlohmann::ordered_json;

struct GlobalOptions {
  std::uint64_t seed = 0;
  int threads = detail::default_thread_count();
  bool json = false;
};

// Text mode prints one key=value line per scalar with 12 significant digits;
// json mode prints the whole document with round-trip precision.
void print_text(std::ostream& out, const std::string& key, const Json& value) {
  if (value.is_object()) {
    for (const auto& [k, v] : value.items()) print_text(out, key.empty() ? k : key + "." + k, v);
  } else if (value.is_array()) {
    for (std::size_t i = 0; i < value.size(); ++i) print_text(out, key + "[" + std::to_string(i) + "]", value[i]);
  } else if (value.is_number_float()) {
    std::ostringstream s;
    s << std::setprecision(12) << value.get<double>();
    out << key << '=' << s.str() << '\n';
  } else if (value.is_string()) {
    out << key << '=' << value.get<std::string>() << '\n';
  } else {
    out << key << '=' << value.dump() << '\n';
  }
}

void emit(std::ostream& out, const GlobalOptions& global, const Json& report) {
  if (global.json) {
    out << report.dump() << '\n';
  } else {
    print_text(out, "", report);
  }
}

Json angles_json(const ProductStateParams& params) {
  Json list = Json::array();
  for (const auto& a : params.angles()) list.push_back(Json{{"theta", a.theta}, {"phi", a.phi}});
  return list;
}

Json ensemble_json(const SeparableEnsemble& ensemble) {
  Json terms = Json::array();
  for (int mu = 0; mu < ensemble.num_terms(); ++mu) {
    terms.push_back(Json{{"weight", ensemble.weights()[static_cast<std::size_t>(mu)]},
                         {"qubits", angles_json(ensemble.terms()[static_cast<std::size_t>(mu)])}});
  }
  return terms;
}

Json diagnostics_json(const OptimizerDiagnostics& d) {
  return Json{{"restarts", d.restarts_used}, {"iterations", d.iterations}, {"residual", d.residual}};
}

int finish(std::ostream& out, const GlobalOptions& global, Json report, bool converged) {
  report["converged"] = converged;
  if (!converged) report["warning"] = "optimizer did not converge";
  emit(out, global, report);
  return converged ? kExitOk : kExitNotConverged;
}

void write_or_print(std::ostream& out, const std::string& path, const AnyState& state) {
  if (path.empty()) {
    out << std::visit([](const auto& s) { return serialize_state(s); }, state);
  } else {
    write_state_file(path, state);
  }
}

PureState require_pure(const AnyState& state, const std::string& path) {
  if (const auto* psi = std::get_if<PureState>(&state)) return *psi;
  throw std::invalid_argument(path + ": expected a pure state file");
}

std::string mixed_state_note(const std::string& path, const DensityMatrix& rho, int max_qubits) {
  if (rho.num_qubits() > max_qubits) {
    return path + ": " + std::to_string(rho.num_qubits()) + " qubits, at most " + std::to_string(max_qubits) +
           " supported here";
  }
  return {};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groverian entanglement measure and Grover search simulation", "groverian"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions global;
  app.add_option("--seed", global.seed, "seed for every randomized optimizer");
  app.add_option("--threads", global.threads, "worker threads (results do not depend on this)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", global.json, "machine-readable output");

  // grover run
  auto* grover = app.add_subcommand("grover", "Grover search");
  grover->require_subcommand(1);
  auto* grover_cmd = grover->add_subcommand("run", "run Grover search");
  int grover_n = 0;
  std::vector<std::uint64_t> grover_marked;
  std::optional<int> grover_iterations;
  std::string grover_initial;
  grover_cmd->add_option("--n", grover_n, "qubit count")->required();
  grover_cmd->add_option("--marked", grover_marked, "marked basis indices")->required()->delimiter(',');
  grover_cmd->add_option("--iterations", grover_iterations, "iterations (default: optimal)");
  grover_cmd->add_option("--initial", grover_initial, "initial pure state file (default: uniform)");

  // measure pure / mixed
  auto* measure = app.add_subcommand("measure", "Groverian measure");
  measure->require_subcommand(1);
  auto* pure_cmd = measure->add_subcommand("pure", "measure of a pure state");
  PureMeasureConfig pure_config;
  std::string pure_state;
  pure_cmd->add_option("--state", pure_state, "pure state file")->required();
  pure_cmd->add_option("--restarts", pure_config.restarts)->check(CLI::PositiveNumber);
  pure_cmd->add_option("--tol", pure_config.tol)->check(CLI::PositiveNumber);
  pure_cmd->add_option("--max-sweeps", pure_config.max_sweeps)->check(CLI::PositiveNumber);

  MixedMeasureConfig mixed_config;
  std::string mixed_state;
  auto add_mixed_options = [&](CLI::App* cmd) {
    cmd->add_option("--state", mixed_state, "state file (pure or density)")->required();
    cmd->add_option("--terms", mixed_config.terms, "separable ensemble size (0: default)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--restarts", mixed_config.restarts)->check(CLI::PositiveNumber);
    cmd->add_option("--tol", mixed_config.tol)->check(CLI::PositiveNumber);
    cmd->add_option("--max-iter", mixed_config.max_iterations)->check(CLI::NonNegativeNumber);
    cmd->add_option("--polish-iter", mixed_config.polish_iterations)->check(CLI::NonNegativeNumber);
  };
  auto* mixed_cmd = measure->add_subcommand("mixed", "measure of a density matrix");
  add_mixed_options(mixed_cmd);

  // purify
  auto* purify_cmd = app.add_subcommand("purify", "purify a density matrix into 2n qubits");
  std::string purify_state;
  std::string purify_out;
  purify_cmd->add_option("--state", purify_state, "density file")->required();
  purify_cmd->add_option("--out", purify_out, "output state file (default: stdout)");

  // verify fig2
  auto* verify = app.add_subcommand("verify", "circuit-level checks");
  verify->require_subcommand(1);
  auto* fig2_cmd = verify->add_subcommand("fig2", "simulate the purified search for the optimal separable state");
  add_mixed_options(fig2_cmd);
  std::uint64_t fig2_marked = 0;
  fig2_cmd->add_option("--marked", fig2_marked, "marked index in the 2n-qubit register");

  // track
  auto* track_cmd = app.add_subcommand("track", "Groverian measure along the Grover iterations");
  int track_n = 0;
  std::uint64_t track_marked = 0;
  std::optional<int> track_max_iter;
  std::string track_initial;
  std::string track_out;
  track_cmd->add_option("--n", track_n, "qubit count")->required()->check(CLI::Range(1, 8));
  track_cmd->add_option("--marked", track_marked, "marked basis index")->required();
  track_cmd->add_option("--max-iter", track_max_iter, "last iteration (default: twice the optimal count)");
  track_cmd->add_option("--initial", track_initial, "initial pure state file (default: uniform)");
  track_cmd->add_option("--out", track_out, "CSV file (default: stdout)");
  PureMeasureConfig track_config;
  track_cmd->add_option("--restarts", track_config.restarts)->check(CLI::PositiveNumber);

  // werner
  auto* werner_cmd = app.add_subcommand("werner", "emit a two-qubit Werner state");
  double werner_p = 0.0;
  std::string werner_out;
  werner_cmd->add_option("--p", werner_p, "singlet weight in [0, 1]")->required();
  werner_cmd->add_option("--out", werner_out, "output file (default: stdout)");

  // ppt
  auto* ppt_cmd = app.add_subcommand("ppt", "partial-transpose test for two qubits");
  std::string ppt_state;
  ppt_cmd->add_option("--state", ppt_state, "two-qubit state file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (grover_cmd->parsed()) {
      const Oracle oracle(grover_n, grover_marked);
      const PureState initial = grover_initial.empty() ? uniform_state(grover_n)
                                                       : require_pure(read_state_file(grover_initial), grover_initial);
      if (initial.num_qubits() != grover_n) throw std::invalid_argument(grover_initial + ": qubit count differs from --n");
      const int k = grover_iterations.value_or(optimal_iterations(grover_n, grover_marked.size()));
      const GroverRun run = grover_run(initial, oracle, k);
      emit(out, global, Json{{"iterations", run.iterations},
                             {"success", run.success_probability},
                             {"predicted", predicted_success(initial)}});
      return kExitOk;
    }

    if (pure_cmd->parsed()) {
      const PureState psi = require_pure(read_state_file(pure_state), pure_state);
      pure_config.seed = global.seed;
      pure_config.threads = global.threads;
      const PureMeasureResult r = p_max_pure(psi, pure_config);
      Json report{{"p_max", r.p_max}, {"G", r.g}, {"angles", angles_json(r.best_params)},
                  {"diagnostics", diagnostics_json(r.diagnostics)}};
      return finish(out, global, std::move(report), r.diagnostics.converged);
    }

    if (mixed_cmd->parsed() || fig2_cmd->parsed()) {
      const DensityMatrix rho = as_density(read_state_file(mixed_state));
      mixed_config.seed = global.seed;
      mixed_config.threads = global.threads;
      if (mixed_cmd->parsed()) {
        if (auto note = mixed_state_note(mixed_state, rho, kMaxMixedQubits); !note.empty()) {
          throw std::invalid_argument(note);
        }
        const MixedMeasureResult r = groverian_mixed(rho, mixed_config);
        Json report{{"p_max", r.p_max}, {"G", r.g}, {"ensemble", ensemble_json(r.best_ensemble)},
                    {"diagnostics", diagnostics_json(r.diagnostics)}};
        return finish(out, global, std::move(report), r.diagnostics.converged);
      }
      if (auto note = mixed_state_note(mixed_state, rho, 3); !note.empty()) throw std::invalid_argument(note);
      const Fig2Optimum r = fig2_optimal_success(rho, mixed_config, fig2_marked);
      Json report{{"value", r.value},
                  {"measured", r.measured},
                  {"gap", std::abs(r.measured - r.value)},
                  {"tolerance", fig2_tolerance(rho.num_qubits())},
                  {"within_tolerance", r.within_tolerance},
                  {"G", r.g},
                  {"diagnostics", diagnostics_json(r.diagnostics)}};
      return finish(out, global, std::move(report), r.diagnostics.converged);
    }

    if (purify_cmd->parsed()) {
      const AnyState state = read_state_file(purify_state);
      const auto* rho = std::get_if<DensityMatrix>(&state);
      if (rho == nullptr) throw std::invalid_argument(purify_state + ": expected a density file");
      if (2 * rho->num_qubits() > kMaxQubits) throw std::invalid_argument(purify_state + ": too many qubits to purify");
      write_or_print(out, purify_out, purify(*rho).state);
      return kExitOk;
    }

    if (track_cmd->parsed()) {
      const PureState initial = track_initial.empty() ? uniform_state(track_n)
                                                      : require_pure(read_state_file(track_initial), track_initial);
      const int k = track_max_iter.value_or(2 * optimal_iterations(track_n, 1));
      track_config.seed = global.seed;
      track_config.threads = global.threads;
      const auto records = track_groverian(track_n, track_marked, initial, k, track_config);
      if (track_out.empty()) {
        write_track_csv(out, records);
        return kExitOk;
      }
      std::ofstream file(track_out, std::ios::binary);
      if (!file) throw std::runtime_error(track_out + ": cannot open for writing");
      write_track_csv(file, records);
      const auto peak = std::max_element(records.begin(), records.end(),
                                         [](const auto& a, const auto& b) { return a.groverian < b.groverian; });
      emit(out, global, Json{{"rows", records.size()}, {"max_G", peak->groverian}, {"max_G_iteration", peak->iteration}});
      return kExitOk;
    }

    if (werner_cmd->parsed()) {
      write_or_print(out, werner_out, werner_state(werner_p));
      return kExitOk;
    }

    if (ppt_cmd->parsed()) {
      const PptResult r = ppt_check(as_density(read_state_file(ppt_state)));
      emit(out, global, Json{{"ppt", r.ppt}, {"min_eigenvalue", r.min_eigenvalue}});
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  err << app.help();
  return kExitInvalidInput;
}

}  // namespace groverian
