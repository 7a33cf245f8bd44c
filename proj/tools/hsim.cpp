// Copyright 2026 The hsim developers
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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hsim/circuit.hpp"
#include "hsim/errors.hpp"
#include "hsim/grouping.hpp"
#include "hsim/hamiltonian.hpp"
#include "hsim/ordering.hpp"
#include "hsim/report.hpp"
#include "hsim/sequencer.hpp"
#include "hsim/simulate.hpp"
#include "hsim/tsp.hpp"
#include "hsim/version.hpp"

namespace {

using hsim::Strategy;
using nlohmann::json;

struct CommonOptions {
  std::string input;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opts,
                bool allow_csv = false) {
  // File existence is the loader's concern so that a missing file reports
  // as an input error (exit 2), like any other unreadable Hamiltonian.
  cmd->add_option("--input", opts.input, "Hamiltonian file")->required();
  cmd->add_option("--format", opts.format, "Output format")
      ->check(allow_csv ? CLI::IsMember({"json", "csv"})
                        : CLI::IsMember({"json"}));
  cmd->add_option("--out", opts.out, "Write output to a file instead of stdout");
  cmd->add_option("--seed", opts.seed, "Seed for randomized strategies");
}

void write_output(const CommonOptions& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.out);
  if (!out) throw hsim::InputError("cannot open output file: " + opts.out);
  out << text;
}

std::vector<Strategy> parse_strategies(const std::vector<std::string>& names) {
  std::vector<Strategy> out;
  out.reserve(names.size());
  for (const std::string& name : names) out.push_back(hsim::parse_strategy(name));
  return out;
}

hsim::NoiseModel parse_noise_model(const std::string& name) {
  if (name == "two-qubit-event") return hsim::NoiseModel::TwoQubitEvent;
  if (name == "independent") return hsim::NoiseModel::IndependentSingleQubit;
  throw hsim::InputError("unknown noise model '" + name + "'");
}

hsim::InfidelityConvention parse_convention(const std::string& name) {
  if (name == "squared-fidelity")
    return hsim::InfidelityConvention::SquaredFidelity;
  if (name == "literal") return hsim::InfidelityConvention::OneMinusDistance;
  throw hsim::InputError("unknown infidelity convention '" + name + "'");
}

json ordering_to_json(const hsim::Hamiltonian& h, const hsim::Ordering& order) {
  const std::vector<hsim::PauliString> strings = ordered_strings(h, order);
  json j;
  j["strategy"] = std::string(strategy_name(order.strategy));
  j["permutation"] = order.permutation;
  j["clique_boundaries"] = order.clique_boundaries;
  j["cnot_cost"] = hsim::sequence_cnot_cost(strings);
  json words = json::array();
  for (const auto& s : strings) words.push_back(s.str());
  j["order"] = words;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"Trotterized Hamiltonian-simulation circuit compiler and "
               "evaluator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", hsim::kVersion);

  CommonOptions order_opts;
  std::string order_strategy = "lex";
  auto* order_cmd =
      app.add_subcommand("order", "Order the terms of a Hamiltonian");
  add_common(order_cmd, order_opts);
  order_cmd->add_option("--strategy", order_strategy, "Ordering strategy")
      ->check(CLI::IsMember({"lex", "mag", "random", "deplete", "mctsp"}));

  CommonOptions cover_opts;
  auto* cover_cmd = app.add_subcommand(
      "cover", "Partition terms into mutually commuting cliques");
  add_common(cover_cmd, cover_opts);

  CommonOptions tsp_opts;
  std::size_t tsp_clique = 0;
  auto* tsp_cmd = app.add_subcommand(
      "tsp", "Order one clique's terms by the CNOT-distance TSP heuristic");
  add_common(tsp_cmd, tsp_opts);
  tsp_cmd->add_option("--clique", tsp_clique, "Clique index from `cover`");

  CommonOptions seq_opts;
  auto* seq_cmd = app.add_subcommand(
      "sequence", "Choose the clique visit order for a Hamiltonian");
  add_common(seq_cmd, seq_opts);

  CommonOptions compile_opts;
  std::string compile_strategy = "mctsp";
  std::string compile_emit = "qasm-like";
  double compile_t = 1.0;
  int compile_r = 1;
  auto* compile_cmd =
      app.add_subcommand("compile", "Emit the cancelled Trotter circuit");
  add_common(compile_cmd, compile_opts);
  compile_cmd->add_option("--strategy", compile_strategy, "Ordering strategy")
      ->check(CLI::IsMember({"lex", "mag", "random", "deplete", "mctsp"}));
  compile_cmd->add_option("--t", compile_t, "Evolution time");
  compile_cmd->add_option("--r", compile_r, "Trotter number")
      ->check(CLI::PositiveNumber);
  compile_cmd->add_option("--emit", compile_emit, "Output flavor")
      ->check(CLI::IsMember({"qasm-like"}));

  CommonOptions sim_opts;
  std::string sim_strategy = "mctsp";
  std::string sim_init = "ghz-like";
  std::string sim_noise_model = "two-qubit-event";
  std::string sim_convention = "squared-fidelity";
  double sim_t = 1.0;
  double sim_noise = 0.0;
  int sim_r = 1;
  auto* sim_cmd = app.add_subcommand(
      "simulate", "Noisy distribution and Hellinger metrics for one circuit");
  add_common(sim_cmd, sim_opts);
  sim_cmd->add_option("--strategy", sim_strategy, "Ordering strategy")
      ->check(CLI::IsMember({"lex", "mag", "random", "deplete", "mctsp"}));
  sim_cmd->add_option("--t", sim_t, "Evolution time");
  sim_cmd->add_option("--r", sim_r, "Trotter number")
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--noise", sim_noise, "Depolarizing probability per CNOT")
      ->check(CLI::Range(0.0, 1.0));
  sim_cmd->add_option("--init", sim_init,
                      "Initial state: zero, plus, ghz-like, or basis:k");
  sim_cmd->add_option("--noise-model", sim_noise_model, "Depolarizing model")
      ->check(CLI::IsMember({"two-qubit-event", "independent"}));
  sim_cmd
      ->add_option("--infidelity", sim_convention,
                   "Hellinger infidelity convention")
      ->check(CLI::IsMember({"squared-fidelity", "literal"}));

  CommonOptions sweep_opts;
  std::vector<std::string> sweep_strategies{"lex", "mag", "random", "deplete",
                                            "mctsp"};
  std::vector<double> sweep_t{1.0};
  double sweep_epsilon = 0.1;
  int sweep_r_max = 64;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Scan Trotter numbers to an error threshold per strategy");
  add_common(sweep_cmd, sweep_opts, true);
  sweep_cmd
      ->add_option("--strategies", sweep_strategies, "Strategies to compare")
      ->delimiter(',');
  sweep_cmd->add_option("--t", sweep_t, "Evolution times")->delimiter(',');
  sweep_cmd->add_option("--epsilon", sweep_epsilon, "Diamond-distance threshold")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--r-max", sweep_r_max, "Largest Trotter number tried")
      ->check(CLI::PositiveNumber);

  CommonOptions noise_opts;
  std::vector<std::string> noise_strategies{"lex", "mag", "random", "deplete",
                                            "mctsp"};
  std::vector<double> noise_p{0.001, 0.005, 0.01, 0.02};
  std::string noise_init = "ghz-like";
  std::string noise_model = "two-qubit-event";
  std::string noise_convention = "squared-fidelity";
  auto* noise_cmd = app.add_subcommand(
      "noise", "Hellinger metrics across a depolarizing-noise grid");
  add_common(noise_cmd, noise_opts, true);
  noise_cmd
      ->add_option("--strategies", noise_strategies, "Strategies to compare")
      ->delimiter(',');
  noise_cmd->add_option("--p", noise_p, "Depolarizing probabilities")
      ->delimiter(',');
  noise_cmd->add_option("--init", noise_init,
                        "Initial state: zero, plus, ghz-like, or basis:k");
  noise_cmd->add_option("--noise-model", noise_model, "Depolarizing model")
      ->check(CLI::IsMember({"two-qubit-event", "independent"}));
  noise_cmd
      ->add_option("--infidelity", noise_convention,
                   "Hellinger infidelity convention")
      ->check(CLI::IsMember({"squared-fidelity", "literal"}));

  // Usage problems exit with code 1; --help and --version exit 0.
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (order_cmd->parsed()) {
    const hsim::Hamiltonian h = hsim::load_hamiltonian(order_opts.input);
    const hsim::Ordering order = hsim::make_ordering(
        h, hsim::parse_strategy(order_strategy), order_opts.seed);
    write_output(order_opts, ordering_to_json(h, order).dump(2) + "\n");
    return 0;
  }

  if (cover_cmd->parsed()) {
    const hsim::Hamiltonian h = hsim::load_hamiltonian(cover_opts.input);
    const hsim::CliqueCover cover =
        hsim::min_clique_cover(hsim::build_commutation_graph(h));
    json j;
    j["cliques"] = cover.cliques;
    write_output(cover_opts, j.dump(2) + "\n");
    return 0;
  }

  if (tsp_cmd->parsed()) {
    const hsim::Hamiltonian h = hsim::load_hamiltonian(tsp_opts.input);
    const hsim::CliqueCover cover =
        hsim::min_clique_cover(hsim::build_commutation_graph(h));
    if (tsp_clique >= cover.cliques.size())
      throw hsim::InputError("clique index " + std::to_string(tsp_clique) +
                             " out of range: cover has " +
                             std::to_string(cover.cliques.size()) +
                             " cliques");
    const std::vector<std::size_t>& members = cover.cliques[tsp_clique];
    std::vector<hsim::PauliString> strings;
    strings.reserve(members.size());
    for (const std::size_t t : members) strings.push_back(h.term(t).string);

    const hsim::TspInstance inst = hsim::make_cnot_instance(strings);
    const std::vector<std::size_t> path = hsim::tsp_path(inst);
    std::vector<std::size_t> identity(members.size());
    std::iota(identity.begin(), identity.end(), 0);

    json j;
    j["clique"] = tsp_clique;
    j["members"] = members;
    json terms = json::array();
    for (const std::size_t local : path) terms.push_back(members[local]);
    j["path"] = terms;
    j["path_cost"] = hsim::path_cost(inst, path);
    j["input_order_cost"] = hsim::path_cost(inst, identity);
    write_output(tsp_opts, j.dump(2) + "\n");
    return 0;
  }

  if (seq_cmd->parsed()) {
    const hsim::Hamiltonian h = hsim::load_hamiltonian(seq_opts.input);
    const hsim::CommutationGraph graph = hsim::build_commutation_graph(h);
    const hsim::CliqueCover cover = hsim::min_clique_cover(graph);
    const Eigen::MatrixXd costs = hsim::pair_cost_table(h, cover);
    const Eigen::MatrixXi edges = hsim::clique_edge_counts(graph, cover);
    const auto candidates = hsim::sequence_candidates(edges);
    const std::vector<std::size_t> perm =
        hsim::sequence_cliques(h, cover, graph);
    json j;
    j["candidates"] = candidates.size();
    j["permutation"] = perm;
    j["score"] = hsim::sequence_score(costs, perm);
    write_output(seq_opts, j.dump(2) + "\n");
    return 0;
  }

  if (compile_cmd->parsed()) {
    const hsim::Hamiltonian h = hsim::load_hamiltonian(compile_opts.input);
    const hsim::Ordering order = hsim::make_ordering(
        h, hsim::parse_strategy(compile_strategy), compile_opts.seed);
    const hsim::Circuit circuit =
        hsim::trotterize(h, order, compile_t, compile_r);
    write_output(compile_opts, hsim::emit_gate_list(circuit));
    return 0;
  }

  if (sim_cmd->parsed()) {
    const hsim::Hamiltonian h = hsim::load_hamiltonian(sim_opts.input);
    const hsim::Ordering order = hsim::make_ordering(
        h, hsim::parse_strategy(sim_strategy), sim_opts.seed);
    const hsim::Circuit circuit = hsim::trotterize(h, order, sim_t, sim_r);
    const Eigen::VectorXcd init = hsim::initial_state(sim_init, h.width());
    const hsim::NoiseModel model = parse_noise_model(sim_noise_model);
    const Eigen::VectorXd ideal =
        hsim::noisy_distribution(circuit, init, 0.0, model);
    const Eigen::VectorXd noisy =
        hsim::noisy_distribution(circuit, init, sim_noise, model);

    json j;
    j["strategy"] = sim_strategy;
    j["t"] = sim_t;
    j["r"] = sim_r;
    j["noise"] = sim_noise;
    j["noise_model"] = sim_noise_model;
    j["init"] = sim_init;
    j["cnot_count"] = hsim::cnot_count(circuit);
    j["distribution"] = std::vector<double>(noisy.begin(), noisy.end());
    j["noiseless"] = std::vector<double>(ideal.begin(), ideal.end());
    j["hellinger_distance"] = hsim::hellinger_distance(noisy, ideal);
    j["hellinger_infidelity"] = hsim::hellinger_infidelity(
        noisy, ideal, parse_convention(sim_convention));
    write_output(sim_opts, j.dump(2) + "\n");
    return 0;
  }

  if (sweep_cmd->parsed()) {
    const hsim::Hamiltonian h = hsim::load_hamiltonian(sweep_opts.input);
    hsim::SweepConfig config;
    config.t_values = sweep_t;
    config.epsilon = sweep_epsilon;
    config.r_max = sweep_r_max;
    config.strategies = parse_strategies(sweep_strategies);
    config.seed = sweep_opts.seed;
    hsim::EvaluationReport report = hsim::sweep(config, h);
    report.input_name = sweep_opts.input;
    const auto format = sweep_opts.format == "csv" ? hsim::ReportFormat::Csv
                                                   : hsim::ReportFormat::Json;
    write_output(sweep_opts, hsim::report_emit(report, format));
    return 0;
  }

  const hsim::Hamiltonian h = hsim::load_hamiltonian(noise_opts.input);
  hsim::EvaluationReport report = hsim::noise_run(
      h, parse_strategies(noise_strategies), noise_p, noise_init,
      noise_opts.seed, parse_noise_model(noise_model),
      parse_convention(noise_convention));
  report.input_name = noise_opts.input;
  const auto format = noise_opts.format == "csv" ? hsim::ReportFormat::Csv
                                                 : hsim::ReportFormat::Json;
  write_output(noise_opts, hsim::report_emit(report, format));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hsim::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const hsim::CapabilityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 70;
  }
}
