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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hsim/hamiltonian.hpp"
#include "hsim/ordering.hpp"
#include "hsim/simulate.hpp"

namespace hsim {

struct SweepConfig {
  std::vector<double> t_values;
  double epsilon = 0.1;
  int r_max = 64;
  std::vector<Strategy> strategies;
  std::uint64_t seed = 0;
};

// One (strategy, t) grid point. `error` carries a capability failure for
// the cell; all other fields are meaningless when it is set.
struct SweepCell {
  Strategy strategy = Strategy::Lexicographic;
  double t = 0.0;
  int r = 0;
  double diamond_distance = 0.0;
  std::size_t cnot_count = 0;
  bool threshold_met = false;
  std::string error;
};

// One (strategy, p) noise grid point at t = 1, r = 1.
struct NoiseCell {
  Strategy strategy = Strategy::Lexicographic;
  double p = 0.0;
  double hellinger = 0.0;
  double infidelity = 0.0;
  std::size_t cnot_count = 0;
  std::string error;
};

struct StrategySummary {
  Strategy strategy = Strategy::Lexicographic;
  // Geometric mean of accepted-circuit CNOT counts across sweep cells
  // (this tool's summary convention; cells with errors excluded).
  double cnot_geomean = 0.0;
};

struct EvaluationReport {
  std::string input_name;
  int width = 0;
  std::size_t term_count = 0;
  SweepConfig config;
  std::vector<SweepCell> sweep_cells;
  std::vector<NoiseCell> noise_cells;
  std::vector<StrategySummary> summaries;
  std::string initial_state_spec;
  std::string noise_model;
  std::string infidelity_convention;
};

// For each strategy and t: the smallest r in 1..r_max whose Trotter error
// beats config.epsilon (linear scan), with the accepted circuit's CNOT
// count. If no r qualifies, the r_max cell is recorded with threshold_met
// = false. Capability errors are recorded per cell without aborting.
// Cells are evaluated in parallel across min(HSIM_THREADS, hardware)
// workers; results are deterministic.
EvaluationReport sweep(const SweepConfig& config, const Hamiltonian& h);

// For each strategy and p: Hellinger distance and infidelity between the
// noisy and noiseless output distributions of the t = 1, r = 1 circuit on
// the given initial state.
EvaluationReport noise_run(
    const Hamiltonian& h, const std::vector<Strategy>& strategies,
    const std::vector<double>& p_values, const std::string& init_spec,
    std::uint64_t seed = 0, NoiseModel model = NoiseModel::TwoQubitEvent,
    InfidelityConvention convention = InfidelityConvention::SquaredFidelity);

enum class ReportFormat { Json, Csv };

// Schema-stable serialization. JSON carries schema version 1, the tool
// version, the full config, and a timestamp; two runs with identical
// inputs differ only in the timestamp field. CSV columns are documented in
// the README.
std::string report_emit(const EvaluationReport& report, ReportFormat format);

// Worker-thread cap: min of HSIM_THREADS (when set and positive) and
// std::thread::hardware_concurrency, at least 1.
int worker_count();

}  // namespace hsim
