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

#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <regex>
#include <string>

#include "hsim/hamiltonian.hpp"
#include "hsim/ordering.hpp"
#include "hsim/simulate.hpp"
#include "hsim/version.hpp"

using hsim::EvaluationReport;
using hsim::Hamiltonian;
using hsim::NoiseCell;
using hsim::ReportFormat;
using hsim::Strategy;
using hsim::SweepCell;
using hsim::SweepConfig;

namespace {

const char* kCommuting =
    "1.0 XXXX\n1.0 XXYY\n1.0 XYXY\n1.0 XYYX\n"
    "1.0 YXXY\n1.0 YXYX\n1.0 YYXX\n1.0 YYYY\n";

std::string strip_timestamp(std::string text) {
  static const std::regex ts("\"timestamp\": \"[^\"]*\"");
  return std::regex_replace(text, ts, "\"timestamp\": \"\"");
}

SweepConfig small_config() {
  SweepConfig config;
  config.t_values = {0.5, 1.0};
  config.epsilon = 0.1;
  config.r_max = 16;
  config.strategies = {Strategy::Lexicographic, Strategy::MaxCommuteTsp};
  return config;
}

}  // namespace

TEST_CASE("fully commuting Hamiltonians sweep to r=1 everywhere") {
  const Hamiltonian h = hsim::parse_hamiltonian(kCommuting);
  SweepConfig config = small_config();
  config.epsilon = 1e-6;
  const EvaluationReport report = hsim::sweep(config, h);

  REQUIRE(report.sweep_cells.size() == 4);
  for (const SweepCell& cell : report.sweep_cells) {
    CHECK(cell.error.empty());
    CHECK(cell.r == 1);
    CHECK(cell.threshold_met);
    CHECK(cell.diamond_distance <= 1e-6);
  }
  CHECK(report.width == 4);
  CHECK(report.term_count == 8);

  // All cells of one strategy share the r=1 circuit cost, so the geometric
  // mean collapses to it: 40 for lexicographic, 36 for the TSP pipeline.
  REQUIRE(report.summaries.size() == 2);
  CHECK(report.summaries[0].strategy == Strategy::Lexicographic);
  CHECK(report.summaries[0].cnot_geomean == doctest::Approx(40.0));
  CHECK(report.summaries[1].strategy == Strategy::MaxCommuteTsp);
  CHECK(report.summaries[1].cnot_geomean == doctest::Approx(36.0));
}

TEST_CASE("sweep records the smallest qualifying r") {
  const Hamiltonian h = hsim::random_hamiltonian(3, 5, 77);
  SweepConfig config;
  config.t_values = {1.0};
  config.epsilon = 0.05;
  config.r_max = 32;
  config.strategies = {Strategy::Lexicographic};
  const EvaluationReport report = hsim::sweep(config, h);
  REQUIRE(report.sweep_cells.size() == 1);
  const SweepCell& cell = report.sweep_cells[0];
  REQUIRE(cell.error.empty());
  REQUIRE(cell.threshold_met);
  CHECK(cell.diamond_distance < 0.05);

  const hsim::Ordering o = hsim::order_lexicographic(h);
  CHECK(cell.diamond_distance ==
        doctest::Approx(hsim::trotter_error(h, o, 1.0, cell.r))
            .epsilon(1e-12));
  if (cell.r > 1) CHECK(hsim::trotter_error(h, o, 1.0, cell.r - 1) >= 0.05);
}

TEST_CASE("unreachable thresholds are recorded, not thrown") {
  const Hamiltonian h = hsim::random_hamiltonian(3, 5, 78);
  SweepConfig config;
  config.t_values = {4.0};
  config.epsilon = 1e-9;
  config.r_max = 2;
  config.strategies = {Strategy::Magnitude};
  const EvaluationReport report = hsim::sweep(config, h);
  REQUIRE(report.sweep_cells.size() == 1);
  CHECK(report.sweep_cells[0].error.empty());
  CHECK(!report.sweep_cells[0].threshold_met);
  CHECK(report.sweep_cells[0].r == 2);
}

TEST_CASE("capability failures are captured per cell") {
  std::string wide_a(13, 'Z');
  std::string wide_b(13, 'X');
  const Hamiltonian h =
      hsim::parse_hamiltonian("1.0 " + wide_a + "\n0.5 " + wide_b + "\n");
  SweepConfig config;
  config.t_values = {1.0};
  config.strategies = {Strategy::Lexicographic};
  config.r_max = 4;
  const EvaluationReport report = hsim::sweep(config, h);
  REQUIRE(report.sweep_cells.size() == 1);
  CHECK(!report.sweep_cells[0].error.empty());
  CHECK(report.summaries.empty());
}

TEST_CASE("noise run reports monotone infidelity under growing noise") {
  const Hamiltonian h = hsim::parse_hamiltonian(kCommuting);
  const EvaluationReport report = hsim::noise_run(
      h, {Strategy::MaxCommuteTsp}, {0.0, 0.001, 0.01, 0.05}, "ghz-like");
  REQUIRE(report.noise_cells.size() == 4);
  CHECK(report.noise_cells[0].infidelity <= 1e-10);
  for (std::size_t i = 1; i < 4; ++i) {
    CHECK(report.noise_cells[i].error.empty());
    CHECK(report.noise_cells[i].infidelity >=
          report.noise_cells[i - 1].infidelity);
    CHECK(report.noise_cells[i].hellinger >= 0.0);
    CHECK(report.noise_cells[i].hellinger <= 1.0);
  }
  CHECK(report.initial_state_spec == "ghz-like");
}

TEST_CASE("JSON output is schema-stable and deterministic modulo timestamp") {
  const Hamiltonian h = hsim::random_hamiltonian(3, 5, 79);
  const SweepConfig config = small_config();
  const EvaluationReport a = hsim::sweep(config, h);
  const EvaluationReport b = hsim::sweep(config, h);

  const std::string ja = hsim::report_emit(a, ReportFormat::Json);
  const std::string jb = hsim::report_emit(b, ReportFormat::Json);
  CHECK(strip_timestamp(ja) == strip_timestamp(jb));

  const nlohmann::json parsed = nlohmann::json::parse(ja);
  CHECK(parsed.at("schema").get<int>() == 1);
  CHECK(parsed.at("version").get<std::string>() == hsim::kVersion);
  CHECK(parsed.contains("timestamp"));
  CHECK(parsed.at("config").at("epsilon").get<double>() == 0.1);
  REQUIRE(parsed.at("sweep").is_array());
  REQUIRE(parsed.at("sweep").size() == 4);

  // Round-trip numeric exactness: the serialized diamond distance parses
  // back to the identical double.
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& cell = parsed.at("sweep").at(i);
    CHECK(cell.at("diamond_distance").get<double>() ==
          a.sweep_cells[i].diamond_distance);
    CHECK(cell.at("strategy").get<std::string>() ==
          hsim::strategy_name(a.sweep_cells[i].strategy));
  }
}

TEST_CASE("CSV output has the documented header and row count") {
  const Hamiltonian h = hsim::random_hamiltonian(3, 4, 80);
  const SweepConfig config = small_config();
  const EvaluationReport report = hsim::sweep(config, h);
  const std::string csv = hsim::report_emit(report, ReportFormat::Csv);

  std::size_t lines = 0;
  for (const char c : csv) lines += c == '\n';
  CHECK(lines == 1 + report.sweep_cells.size());
  CHECK(csv.rfind("kind,strategy,t_or_p,r,diamond_or_hellinger,infidelity,"
                  "cnot_count,threshold_met,error\n",
                  0) == 0);

  const EvaluationReport noise =
      hsim::noise_run(h, {Strategy::Lexicographic}, {0.01}, "zero");
  const std::string ncsv = hsim::report_emit(noise, ReportFormat::Csv);
  CHECK(ncsv.find("\nnoise,lex,") != std::string::npos);
}

TEST_CASE("worker count respects HSIM_THREADS") {
  CHECK(hsim::worker_count() >= 1);
}
