// Copyright 2026 The qwalk developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/cli.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qwalk/circuit.hpp"
#include "qwalk/coins.hpp"
#include "qwalk/compile.hpp"
#include "qwalk/simulate.hpp"
#include "qwalk/walk.hpp"

namespace qwalk::cli {

namespace {

using nlohmann::ordered_json;

struct RunSpec {
  int n = 3;
  int m = 0;
  int steps = 1;
  std::uint64_t shots = 0;
  std::optional<std::uint64_t> seed;
  std::string coins = "random";
  bool optimized = false;
  std::uint64_t initial_position = 0;
  int initial_coin = 0;
};

void write_output(const std::string& text, const std::string& path,
                  std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw CircuitError("cannot write output file: " + path);
  f << text;
}

CoinTable resolve_coins(const RunSpec& spec) {
  if (spec.coins == "random") {
    if (!spec.seed)
      throw CircuitError("--seed is required when coins are random");
    return random_coin_table(spec.n, *spec.seed);
  }
  CoinTable t = load_coin_table(spec.coins);
  if (t.n != spec.n)
    throw CircuitError("coin table size does not match --n");
  return t;
}

void load_config(RunSpec& spec, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CircuitError("cannot open config file: " + path);
  nlohmann::json j;
  in >> j;
  if (j.contains("n")) spec.n = j["n"].get<int>();
  if (j.contains("m")) spec.m = j["m"].get<int>();
  if (j.contains("steps")) spec.steps = j["steps"].get<int>();
  if (j.contains("shots")) spec.shots = j["shots"].get<std::uint64_t>();
  if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("coins")) spec.coins = j["coins"].get<std::string>();
  if (j.contains("optimized")) spec.optimized = j["optimized"].get<bool>();
  if (j.contains("initial_position"))
    spec.initial_position = j["initial_position"].get<std::uint64_t>();
  if (j.contains("initial_coin"))
    spec.initial_coin = j["initial_coin"].get<int>();
}

void validate(const RunSpec& spec) {
  if (spec.n < 1) throw CircuitError("--n must be at least 1");
  if (spec.m < 0 || spec.m > spec.n)
    throw CircuitError("--m must satisfy 0 <= m <= n");
  if (spec.steps < 0) throw CircuitError("--steps must be non-negative");
  if (spec.initial_position >= (std::uint64_t{1} << spec.n))
    throw CircuitError("--initial-position out of range");
  if (spec.initial_coin != 0 && spec.initial_coin != 1)
    throw CircuitError("--initial-coin must be 0 or 1");
}

int cmd_run(const RunSpec& spec, const std::string& out_path,
            const std::string& dist_csv, const std::string& hist_csv,
            std::ostream& out) {
  validate(spec);
  const WireLayout layout(spec.n, spec.m);
  if (layout.wire_count() > kMaxDenseWires)
    throw SizeError("register too wide for dense simulation; lower m or n");
  const CoinTable coins = resolve_coins(spec);

  const Circuit step = build_walk_step(
      {spec.n, spec.m, coins, spec.optimized});
  StateVector state =
      basis_state(layout.wire_count(),
                  spec.initial_position +
                      (static_cast<std::uint64_t>(spec.initial_coin) << spec.n));
  for (int s = 0; s < spec.steps; ++s) apply_circuit(state, step);

  // ancillas must come back clean every step; the walker block is the
  // low-index quarter of the register
  const Eigen::Index walker_dim = Eigen::Index{1} << (spec.n + 1);
  const StateVector walker = state.head(walker_dim);
  const double leakage =
      state.tail(state.size() - walker_dim).squaredNorm();
  if (leakage > 1e-10)
    throw std::runtime_error("ancilla wires did not return to zero");

  const StateVector oracle = direct_walk_oracle(
      coins, spec.steps,
      basis_state(spec.n + 1,
                  spec.initial_position +
                      (static_cast<std::uint64_t>(spec.initial_coin) << spec.n)));
  const double linf = (walker - oracle).cwiseAbs().maxCoeff();

  const Distribution dist = position_distribution(state, layout);
  const Histogram hist =
      sample(dist, spec.shots, spec.seed.value_or(0));

  ordered_json doc;
  doc["n"] = spec.n;
  doc["m"] = spec.m;
  doc["steps"] = spec.steps;
  doc["shots"] = spec.shots;
  if (spec.seed) doc["seed"] = *spec.seed;
  doc["optimized"] = spec.optimized;
  doc["initial_position"] = spec.initial_position;
  doc["initial_coin"] = spec.initial_coin;
  doc["linf_vs_oracle"] = linf;
  doc["distribution"] = ordered_json::parse(distribution_to_json(dist));
  if (spec.shots > 0) {
    doc["histogram"] = ordered_json::parse(histogram_to_json(hist));
    doc["total_variation"] = total_variation(hist, dist);
  }
  write_output(doc.dump(2) + "\n", out_path, out);
  if (!dist_csv.empty()) write_output(distribution_to_csv(dist), dist_csv, out);
  if (!hist_csv.empty()) write_output(histogram_to_csv(hist), hist_csv, out);

  return linf < 1e-8 ? kOk : kVerificationFailure;
}

int cmd_verify(int n_max, int seeds, std::uint64_t base_seed,
               std::ostream& out) {
  if (n_max < 1) throw CircuitError("--n-max must be at least 1");
  if (seeds < 1) throw CircuitError("--seeds must be at least 1");
  bool ok = true;
  for (int n = 1; n <= n_max; ++n) {
    const Eigen::Index walker_dim = Eigen::Index{1} << (n + 1);
    for (int m = 0; m <= n; ++m) {
      double worst = 0.0;
      for (int s = 0; s < seeds; ++s) {
        const CoinTable coins = random_coin_table(n, base_seed + s);
        const Eigen::MatrixXcd coin_op = coin_operator_matrix(coins);
        const Eigen::MatrixXcd step_op = shift_matrix(n) * coin_op;
        const Circuit coin_circuit = build_coin_circuit(n, m, coins);
        const Circuit step_circuit = build_walk_step({n, m, coins, false});
        const auto column_error = [&](const Circuit& circuit,
                                      const Eigen::MatrixXcd& expect,
                                      Eigen::Index col) {
          const auto got = apply_circuit_to_basis(
              circuit, static_cast<std::uint64_t>(col));
          double e = 0.0;
          for (Eigen::Index row = 0; row < walker_dim; ++row) {
            std::complex<double> amp(0.0, 0.0);
            const auto it = got.find(static_cast<std::uint64_t>(row));
            if (it != got.end()) amp = it->second;
            e = std::max(e, std::abs(amp - expect(row, col)));
          }
          // anything outside the walker block is leakage into ancillas
          for (const auto& [idx, amp] : got)
            if (idx >= static_cast<std::uint64_t>(walker_dim))
              e = std::max(e, std::abs(amp));
          return e;
        };
        for (Eigen::Index col = 0; col < walker_dim; ++col) {
          worst = std::max(worst, column_error(coin_circuit, coin_op, col));
          worst = std::max(worst, column_error(step_circuit, step_op, col));
        }
      }
      ok = ok && worst < 1e-10;
      out << "n=" << n << " m=" << m << " max_error=" << worst
          << (worst < 1e-10 ? "" : "  FAIL") << "\n";
    }
  }
  return ok ? kOk : kVerificationFailure;
}

int cmd_sweep(int n, const std::string& cost_name, bool skip_compile,
              std::uint64_t seed, const std::string& out_path,
              std::ostream& out) {
  if (n < 1) throw CircuitError("--n must be at least 1");
  CostModel cost;
  if (cost_name == "atomic")
    cost = CostModel::atomic();
  else if (cost_name == "linear")
    cost = CostModel::linear();
  else
    throw CircuitError("--cost-model must be atomic or linear");

  const CoinTable coins = random_coin_table(n, seed);
  std::ostringstream csv;
  csv << "m,structural_depth,structural_width,compiled_depth,compiled_width,"
         "compiled_size,formula_depth,match\n";
  bool all_match = true;
  for (int m = 0; m <= n; ++m) {
    const Circuit u = build_coin_circuit(n, m, coins);
    const long long measured =
        circuit_depth(u, cost, DepthMode::PerSegmentSum);
    const int width = circuit_width(u, cost);
    const long long formula = structural_depth(n, m, cost);
    const bool match =
        measured == formula && width == structural_width(n, m, cost);
    all_match = all_match && match;
    csv << m << ',' << measured << ',' << width << ',';
    if (skip_compile) {
      csv << ",,";
    } else {
      const CompiledMetrics cm = compiled_metrics(u);
      csv << cm.depth << ',' << cm.width << ',' << cm.size;
    }
    csv << ',' << formula << ',' << (match ? 1 : 0) << '\n';
  }
  write_output(csv.str(), out_path, out);
  return all_match ? kOk : kVerificationFailure;
}

int cmd_export(const RunSpec& spec, bool with_shift, bool compile_flag,
               const std::string& out_path, std::ostream& out) {
  validate(spec);
  const CoinTable coins = resolve_coins(spec);
  Circuit c = spec.optimized
                  ? build_coin_circuit_optimized(spec.n, spec.m, coins)
                  : build_coin_circuit(spec.n, spec.m, coins);
  if (with_shift) c = build_walk_step({spec.n, spec.m, coins, spec.optimized});
  const std::string text = compile_flag ? to_text(compile(c)) : to_text(c);
  write_output(text, out_path, out);
  return kOk;
}

}  // namespace

int run_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{
      "position-dependent discrete-time quantum walks on a cycle:\n"
      "adjustable-depth circuit construction, simulation and verification"};
  app.require_subcommand(1);

  RunSpec spec;
  std::string config_path, out_path, dist_csv, hist_csv;

  auto add_register_flags = [&spec](CLI::App* cmd) {
    cmd->add_option("--n", spec.n, "position wires (cycle of 2^n sites)");
    cmd->add_option("--m", spec.m, "pack exponent, 0 <= m <= n");
    cmd->add_option("--coins", spec.coins,
                    "coin table JSON file, or 'random'");
    cmd->add_option("--seed", spec.seed,
                    "seed for random coins and sampling");
    cmd->add_flag("--optimized", spec.optimized,
                  "merge stage flips across packs");
  };

  CLI::App* run = app.add_subcommand(
      "run", "simulate a walk, compare against the direct evolution");
  add_register_flags(run);
  run->add_option("--steps", spec.steps, "walk steps");
  run->add_option("--shots", spec.shots, "samples to draw from the result");
  run->add_option("--initial-position", spec.initial_position,
                  "starting site");
  run->add_option("--initial-coin", spec.initial_coin, "starting coin bit");
  run->add_option("--config", config_path, "JSON file with the run options");
  run->add_option("--out", out_path, "write the JSON report here");
  run->add_option("--distribution-csv", dist_csv,
                  "also write the exact distribution as CSV");
  run->add_option("--histogram-csv", hist_csv,
                  "also write the sampled histogram as CSV");

  int n_max = 3;
  int seeds = 3;
  std::uint64_t verify_seed = 1;
  CLI::App* verify = app.add_subcommand(
      "verify", "check circuits against the direct operators for all m");
  verify->add_option("--n-max", n_max, "largest register to check");
  verify->add_option("--seeds", seeds, "random coin tables per register");
  verify->add_option("--seed", verify_seed, "base seed for the coin tables");

  int sweep_n = 4;
  std::string cost_name = "atomic";
  std::uint64_t sweep_seed = 1;
  bool skip_compile = false;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "tabulate depth and width against the closed forms over m");
  sweep->add_option("--n", sweep_n, "position wires");
  sweep->add_option("--cost-model", cost_name, "atomic or linear");
  sweep->add_option("--seed", sweep_seed, "seed for the coin table");
  sweep->add_flag("--skip-compile", skip_compile,
                  "leave the compiled columns empty");
  sweep->add_option("--out", out_path, "write the CSV here");

  bool with_shift = false;
  bool compile_flag = false;
  CLI::App* exp = app.add_subcommand("export", "emit a circuit as text");
  add_register_flags(exp);
  exp->add_flag("--with-shift", with_shift, "append the shift cascades");
  exp->add_flag("--compile", compile_flag,
                "lower to the rotation + CNOT basis first");
  exp->add_option("--out", out_path, "write the circuit here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (run->parsed()) {
      if (!config_path.empty()) {
        RunSpec from_file;
        load_config(from_file, config_path);
        // command-line flags win over the config file
        if (!run->count("--n")) spec.n = from_file.n;
        if (!run->count("--m")) spec.m = from_file.m;
        if (!run->count("--steps")) spec.steps = from_file.steps;
        if (!run->count("--shots")) spec.shots = from_file.shots;
        if (!run->count("--seed") && from_file.seed) spec.seed = from_file.seed;
        if (!run->count("--coins")) spec.coins = from_file.coins;
        if (!run->count("--optimized")) spec.optimized = from_file.optimized;
        if (!run->count("--initial-position"))
          spec.initial_position = from_file.initial_position;
        if (!run->count("--initial-coin"))
          spec.initial_coin = from_file.initial_coin;
      }
      return cmd_run(spec, out_path, dist_csv, hist_csv, out);
    }
    if (verify->parsed()) return cmd_verify(n_max, seeds, verify_seed, out);
    if (sweep->parsed())
      return cmd_sweep(sweep_n, cost_name, skip_compile, sweep_seed, out_path,
                       out);
    if (exp->parsed())
      return cmd_export(spec, with_shift, compile_flag, out_path, out);
  } catch (const SizeError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceError;
  } catch (const CircuitError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace qwalk::cli
