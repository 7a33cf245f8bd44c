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

// End-to-end tests driving the installed hsim binary (path injected via
// HSIM_CLI_PATH at compile time) through popen.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(HSIM_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  std::array<char, 4096> buffer;
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

const fs::path& temp_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("hsim-cli-" + std::to_string(getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_ham(const std::string& name, const std::string& content) {
  const fs::path path = temp_dir() / name;
  std::ofstream out(path);
  out << content;
  return path.string();
}

const std::string& bench8() {
  static const std::string path = write_ham(
      "bench8.ham",
      "1.0 XXXX\n1.0 XXYY\n1.0 XYXY\n1.0 XYYX\n"
      "1.0 YXXY\n1.0 YXYX\n1.0 YYXX\n1.0 YYYY\n");
  return path;
}

const std::string& mix3() {
  static const std::string path =
      write_ham("mix3.ham", "0.5 XXX\n0.25 XZZ\n-0.1 ZZI\n");
  return path;
}

std::string strip_timestamp(std::string text) {
  static const std::regex ts("\"timestamp\": \"[^\"]*\"");
  return std::regex_replace(text, ts, "\"timestamp\": \"\"");
}

}  // namespace

TEST_CASE("order emits permutation, boundaries, words, and cost") {
  const CliResult r =
      run_cli("order --strategy mctsp --input " + bench8() + " --format json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j.at("strategy") == "mctsp");
  CHECK(j.at("cnot_cost") == 36);
  CHECK(j.at("clique_boundaries") == json::array({0, 8}));
  CHECK(j.at("permutation").size() == 8);
  CHECK(j.at("order").at(0) == "XXXX");

  const CliResult lex =
      run_cli("order --strategy lex --input " + bench8());
  REQUIRE(lex.exit_code == 0);
  CHECK(json::parse(lex.output).at("cnot_cost") == 40);
}

TEST_CASE("random orders are reproducible per seed") {
  const CliResult a =
      run_cli("order --strategy random --seed 42 --input " + bench8());
  const CliResult b =
      run_cli("order --strategy random --seed 42 --input " + bench8());
  const CliResult c =
      run_cli("order --strategy random --seed 43 --input " + bench8());
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(json::parse(a.output).at("permutation") !=
        json::parse(c.output).at("permutation"));
}

TEST_CASE("cover reports the single clique of the benchmark") {
  const CliResult r = run_cli("cover --input " + bench8());
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  REQUIRE(j.at("cliques").size() == 1);
  CHECK(j.at("cliques").at(0) == json::array({0, 1, 2, 3, 4, 5, 6, 7}));
}

TEST_CASE("tsp reports input and optimized path costs") {
  const CliResult r = run_cli("tsp --input " + bench8() + " --clique 0");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j.at("input_order_cost") == 32.0);
  CHECK(j.at("path_cost") == 28.0);
  CHECK(j.at("path").size() == 8);

  CHECK(run_cli("tsp --input " + bench8() + " --clique 5").exit_code == 2);
}

TEST_CASE("sequence scores the clique order") {
  const CliResult r = run_cli("sequence --input " + mix3());
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j.at("candidates") == 3);
  CHECK(j.at("permutation") == json::array({0, 1}));
  CHECK(j.at("score") == 0.025);
}

TEST_CASE("compile emits the documented gate list") {
  const std::string xzz = write_ham("xzz.ham", "0.25 XZZ\n");
  const CliResult r =
      run_cli("compile --input " + xzz + " --strategy lex --t 1 --r 1");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output ==
        "h q0\n"
        "cx q0 anc\n"
        "cx q1 anc\n"
        "cx q2 anc\n"
        "rz 0.5 anc\n"
        "cx q2 anc\n"
        "cx q1 anc\n"
        "cx q0 anc\n"
        "h q0\n");
}

TEST_CASE("simulate reports normalized distributions and metrics") {
  const CliResult r = run_cli(
      "simulate --input " + mix3() +
      " --strategy lex --t 1 --r 2 --noise 0 --init ghz-like --format json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  double sum = 0.0;
  for (const auto& v : j.at("distribution")) sum += v.get<double>();
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(j.at("hellinger_infidelity").get<double>() <= 1e-10);
  CHECK(j.at("noise") == 0.0);
  CHECK(j.at("noise_model") == "two-qubit-event");
  CHECK(j.at("cnot_count").get<int>() > 0);
}

TEST_CASE("sweep is deterministic modulo timestamp and honors csv") {
  const std::string common = "sweep --input " + mix3() +
                             " --strategies lex,mctsp --t 0.5,1 "
                             "--epsilon 0.1 --r-max 8";
  const CliResult a = run_cli(common + " --format json");
  const CliResult b = run_cli(common + " --format json");
  REQUIRE(a.exit_code == 0);
  CHECK(strip_timestamp(a.output) == strip_timestamp(b.output));

  const json j = json::parse(a.output);
  CHECK(j.at("schema") == 1);
  CHECK(j.at("sweep").size() == 4);
  for (const auto& cell : j.at("sweep")) {
    CHECK(cell.at("threshold_met") == true);
    CHECK(cell.at("diamond_distance").get<double>() < 0.1);
  }

  const CliResult csv = run_cli(common + " --format csv");
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.output.rfind("kind,strategy,t_or_p,r,diamond_or_hellinger,"
                         "infidelity,cnot_count,threshold_met,error\n",
                         0) == 0);
  std::size_t lines = 0;
  for (const char ch : csv.output) lines += ch == '\n';
  CHECK(lines == 5);
}

TEST_CASE("noise grid defaults to the published error rates") {
  const CliResult r = run_cli("noise --input " + mix3() +
                              " --strategies mctsp --init ghz-like "
                              "--format json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  REQUIRE(j.at("noise").size() == 4);
  CHECK(j.at("noise").at(0).at("p") == 0.001);
  CHECK(j.at("noise").at(3).at("p") == 0.02);
  double prev = -1.0;
  for (const auto& cell : j.at("noise")) {
    CHECK(cell.at("hellinger_infidelity").get<double>() >= prev);
    prev = cell.at("hellinger_infidelity").get<double>();
  }
}

TEST_CASE("--out writes the report to a file") {
  const fs::path out = temp_dir() / "report.json";
  const CliResult r = run_cli("cover --input " + mix3() + " --out " +
                              out.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.empty());
  std::ifstream in(out);
  REQUIRE(in.good());
  json j;
  in >> j;
  CHECK(j.contains("cliques"));
}

TEST_CASE("exit codes distinguish usage, input, and capability errors") {
  CHECK(run_cli("--version").exit_code == 0);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("badcmd").exit_code == 1);
  CHECK(run_cli("order --input " + mix3() + " --strategy bogus").exit_code ==
        1);
  CHECK(run_cli("order --strategy lex").exit_code == 1);

  CHECK(run_cli("order --strategy lex --input /nonexistent.ham").exit_code ==
        2);
  const std::string bad = write_ham("bad.ham", "garbage line\n");
  CHECK(run_cli("order --strategy lex --input " + bad).exit_code == 2);

  const std::string wide = write_ham("wide.ham", "1.0 " + std::string(13, 'Z') +
                                                     "\n0.5 " +
                                                     std::string(13, 'X') + "\n");
  CHECK(run_cli("simulate --input " + wide +
                " --strategy lex --t 1 --r 1 --init zero")
            .exit_code == 3);
}
