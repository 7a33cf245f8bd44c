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

#include "hsim/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <functional>
#include <map>
#include <thread>

#include <json.hpp>

#include "hsim/circuit.hpp"
#include "hsim/errors.hpp"
#include "hsim/version.hpp"

namespace hsim {

namespace {

using nlohmann::json;

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void run_parallel(std::size_t n_items, const std::function<void(std::size_t)>& work) {
  const int workers = std::min<int>(worker_count(), static_cast<int>(n_items));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n_items; ++i) work(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < n_items;
           i += static_cast<std::size_t>(workers))
        work(i);
    });
  for (auto& t : pool) t.join();
}

std::vector<StrategySummary> summarize(const std::vector<SweepCell>& cells) {
  std::map<Strategy, std::pair<double, int>> log_sums;
  for (const SweepCell& cell : cells) {
    if (!cell.error.empty() || cell.cnot_count == 0) continue;
    auto& [log_sum, count] = log_sums[cell.strategy];
    log_sum += std::log(static_cast<double>(cell.cnot_count));
    ++count;
  }
  std::vector<StrategySummary> out;
  for (const auto& [strategy, acc] : log_sums)
    out.push_back({strategy, std::exp(acc.first / acc.second)});
  return out;
}

json cell_to_json(const SweepCell& cell) {
  json j{{"strategy", std::string(strategy_name(cell.strategy))},
         {"t", cell.t}};
  if (!cell.error.empty()) {
    j["error"] = cell.error;
    return j;
  }
  j["r"] = cell.r;
  j["diamond_distance"] = cell.diamond_distance;
  j["cnot_count"] = cell.cnot_count;
  j["threshold_met"] = cell.threshold_met;
  return j;
}

json cell_to_json(const NoiseCell& cell) {
  json j{{"strategy", std::string(strategy_name(cell.strategy))},
         {"p", cell.p}};
  if (!cell.error.empty()) {
    j["error"] = cell.error;
    return j;
  }
  j["hellinger_distance"] = cell.hellinger;
  j["hellinger_infidelity"] = cell.infidelity;
  j["cnot_count"] = cell.cnot_count;
  return j;
}

std::string csv_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("HSIM_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) return std::min(hw, cap);
  }
  return hw;
}

EvaluationReport sweep(const SweepConfig& config, const Hamiltonian& h) {
  if (config.t_values.empty())
    throw InputError("sweep: at least one t value is required");
  if (!(config.epsilon > 0.0))
    throw InputError("sweep: epsilon must be positive");
  if (config.r_max < 1) throw InputError("sweep: r_max must be >= 1");
  if (config.strategies.empty())
    throw InputError("sweep: at least one strategy is required");

  EvaluationReport report;
  report.width = h.width();
  report.term_count = h.size();
  report.config = config;

  // Orderings depend only on the strategy; exact evolutions only on t.
  // Both are shared across cells, so build them up front.
  std::vector<Ordering> orderings;
  orderings.reserve(config.strategies.size());
  for (const Strategy s : config.strategies)
    orderings.push_back(make_ordering(h, s, config.seed));

  std::vector<Eigen::MatrixXcd> exact;
  std::string exact_error;
  try {
    exact.reserve(config.t_values.size());
    for (const double t : config.t_values)
      exact.push_back(exact_evolution(h, t));
  } catch (const CapabilityError& e) {
    exact_error = e.what();
  }

  const std::size_t n_t = config.t_values.size();
  report.sweep_cells.resize(config.strategies.size() * n_t);
  run_parallel(report.sweep_cells.size(), [&](std::size_t idx) {
    const std::size_t si = idx / n_t;
    const std::size_t ti = idx % n_t;
    SweepCell& cell = report.sweep_cells[idx];
    cell.strategy = config.strategies[si];
    cell.t = config.t_values[ti];
    if (!exact_error.empty()) {
      cell.error = exact_error;
      return;
    }
    try {
      for (int r = 1; r <= config.r_max; ++r) {
        const Circuit circuit = trotterize(h, orderings[si], cell.t, r);
        const double dist =
            diamond_distance_unitary(circuit_unitary(circuit), exact[ti]);
        cell.r = r;
        cell.diamond_distance = dist;
        cell.cnot_count = cnot_count(circuit);
        cell.threshold_met = dist < config.epsilon;
        if (cell.threshold_met) break;
      }
    } catch (const CapabilityError& e) {
      cell = SweepCell{};
      cell.strategy = config.strategies[si];
      cell.t = config.t_values[ti];
      cell.error = e.what();
    }
  });

  report.summaries = summarize(report.sweep_cells);
  return report;
}

EvaluationReport noise_run(const Hamiltonian& h,
                           const std::vector<Strategy>& strategies,
                           const std::vector<double>& p_values,
                           const std::string& init_spec, std::uint64_t seed,
                           NoiseModel model,
                           InfidelityConvention convention) {
  if (strategies.empty())
    throw InputError("noise_run: at least one strategy is required");
  if (p_values.empty())
    throw InputError("noise_run: at least one noise probability is required");

  EvaluationReport report;
  report.width = h.width();
  report.term_count = h.size();
  report.config.strategies = strategies;
  report.config.seed = seed;
  report.config.t_values = {1.0};
  report.initial_state_spec = init_spec;
  report.noise_model = model == NoiseModel::TwoQubitEvent
                           ? "two-qubit-event"
                           : "independent-single-qubit";
  report.infidelity_convention =
      convention == InfidelityConvention::SquaredFidelity ? "squared-fidelity"
                                                          : "one-minus-distance";

  const Eigen::VectorXcd init = initial_state(init_spec, h.width());

  report.noise_cells.resize(strategies.size() * p_values.size());
  run_parallel(report.noise_cells.size(), [&](std::size_t idx) {
    const std::size_t si = idx / p_values.size();
    const std::size_t pi = idx % p_values.size();
    NoiseCell& cell = report.noise_cells[idx];
    cell.strategy = strategies[si];
    cell.p = p_values[pi];
    try {
      const Ordering order = make_ordering(h, cell.strategy, seed);
      const Circuit circuit = trotterize(h, order, 1.0, 1);
      const Eigen::VectorXd ideal =
          noisy_distribution(circuit, init, 0.0, model);
      const Eigen::VectorXd noisy =
          noisy_distribution(circuit, init, cell.p, model);
      cell.hellinger = hellinger_distance(noisy, ideal);
      cell.infidelity = hellinger_infidelity(noisy, ideal, convention);
      cell.cnot_count = cnot_count(circuit);
    } catch (const CapabilityError& e) {
      cell = NoiseCell{};
      cell.strategy = strategies[si];
      cell.p = p_values[pi];
      cell.error = e.what();
    }
  });
  return report;
}

std::string report_emit(const EvaluationReport& report, ReportFormat format) {
  if (format == ReportFormat::Json) {
    json j;
    j["schema"] = 1;
    j["tool"] = "hsim";
    j["version"] = kVersion;
    j["timestamp"] = utc_timestamp();
    j["input"] = report.input_name;
    j["width"] = report.width;
    j["term_count"] = report.term_count;

    json config;
    config["t_values"] = report.config.t_values;
    config["epsilon"] = report.config.epsilon;
    config["r_max"] = report.config.r_max;
    json strategies = json::array();
    for (const Strategy s : report.config.strategies)
      strategies.push_back(std::string(strategy_name(s)));
    config["strategies"] = strategies;
    config["seed"] = report.config.seed;
    if (!report.initial_state_spec.empty())
      config["initial_state"] = report.initial_state_spec;
    if (!report.noise_model.empty()) config["noise_model"] = report.noise_model;
    if (!report.infidelity_convention.empty())
      config["infidelity_convention"] = report.infidelity_convention;
    j["config"] = config;

    if (!report.sweep_cells.empty()) {
      json cells = json::array();
      for (const SweepCell& cell : report.sweep_cells)
        cells.push_back(cell_to_json(cell));
      j["sweep"] = cells;
    }
    if (!report.noise_cells.empty()) {
      json cells = json::array();
      for (const NoiseCell& cell : report.noise_cells)
        cells.push_back(cell_to_json(cell));
      j["noise"] = cells;
    }
    if (!report.summaries.empty()) {
      json summaries = json::array();
      for (const StrategySummary& s : report.summaries)
        summaries.push_back(
            {{"strategy", std::string(strategy_name(s.strategy))},
             {"cnot_geomean", s.cnot_geomean}});
      j["summary"] = {{"convention",
                       "geometric mean of accepted-circuit CNOT counts over "
                       "sweep cells"},
                      {"per_strategy", summaries}};
    }
    return j.dump(2) + "\n";
  }

  // CSV: one row per cell. Sweep rows:
  //   kind,strategy,t,r,diamond_distance,cnot_count,threshold_met,error
  // Noise rows:
  //   kind,strategy,p,hellinger_distance,hellinger_infidelity,cnot_count,error
  std::string out =
      "kind,strategy,t_or_p,r,diamond_or_hellinger,infidelity,cnot_count,"
      "threshold_met,error\n";
  for (const SweepCell& cell : report.sweep_cells) {
    out += "sweep," + std::string(strategy_name(cell.strategy)) + ',' +
           csv_number(cell.t) + ',' + std::to_string(cell.r) + ',' +
           csv_number(cell.diamond_distance) + ",," +
           std::to_string(cell.cnot_count) + ',' +
           (cell.threshold_met ? "true" : "false") + ',' + cell.error + '\n';
  }
  for (const NoiseCell& cell : report.noise_cells) {
    out += "noise," + std::string(strategy_name(cell.strategy)) + ',' +
           csv_number(cell.p) + ",," + csv_number(cell.hellinger) + ',' +
           csv_number(cell.infidelity) + ',' +
           std::to_string(cell.cnot_count) + ",," + cell.error + '\n';
  }
  return out;
}

}  // namespace hsim
