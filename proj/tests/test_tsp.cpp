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

#include "hsim/tsp.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "hsim/errors.hpp"
#include "hsim/pauli.hpp"
#include "oracles.hpp"

using hsim::InputError;
using hsim::make_cnot_instance;
using hsim::PauliString;
using hsim::path_cost;
using hsim::tsp_path;
using hsim::TspInstance;

namespace {

std::vector<PauliString> parse_all(const std::vector<std::string>& words) {
  std::vector<PauliString> out;
  for (const auto& w : words) out.push_back(PauliString::parse(w));
  return out;
}

const std::vector<std::string> kEightWords = {"XXXX", "XXYY", "XYXY", "XYYX",
                                              "YXXY", "YXYX", "YYXX", "YYYY"};

std::vector<std::size_t> identity_perm(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

double lexicographic_cost(const TspInstance& inst) {
  std::vector<std::size_t> order = identity_perm(inst.size());
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return inst.nodes[a] < inst.nodes[b];
  });
  return path_cost(inst, order);
}

// Random instances that exercise the heuristic branch (> 10 nodes) need
// distinct words; rejection-sample from the oracle generator.
std::vector<PauliString> distinct_words(std::mt19937_64& gen, int width,
                                        std::size_t count) {
  std::set<std::string> seen;
  std::vector<PauliString> out;
  while (out.size() < count) {
    const std::string w = oracles::random_word(gen, width);
    if (w == std::string(static_cast<std::size_t>(width), 'I')) continue;
    if (!seen.insert(w).second) continue;
    out.push_back(PauliString::parse(w));
  }
  return out;
}

}  // namespace

TEST_CASE("instance matrix holds pairwise CNOT distances") {
  const auto strings = parse_all({"XXX", "XZZ", "XYI"});
  const TspInstance inst = make_cnot_instance(strings);
  REQUIRE(inst.size() == 3);
  CHECK(inst.dist(0, 0) == 0.0);
  CHECK(inst.dist(0, 1) == 4.0);
  CHECK(inst.dist(1, 0) == 4.0);
  CHECK(inst.dist(0, 2) == 3.0);
  CHECK(inst.nodes[1].str() == "XZZ");
}

TEST_CASE("eight-string instance reproduces the published costs") {
  const TspInstance inst = make_cnot_instance(parse_all(kEightWords));

  CHECK(path_cost(inst, identity_perm(8)) == 32.0);

  const std::vector<std::size_t> flipped = {0, 1, 2, 3, 5, 4, 6, 7};
  CHECK(path_cost(inst, flipped) == 28.0);

  const std::vector<std::size_t> found = tsp_path(inst);
  CHECK(path_cost(inst, found) == 28.0);
}

TEST_CASE("path_cost rejects non-permutations") {
  const TspInstance inst = make_cnot_instance(parse_all(kEightWords));
  CHECK_THROWS_AS(path_cost(inst, std::vector<std::size_t>{0, 1, 2}),
                  InputError);
  CHECK_THROWS_AS(
      path_cost(inst, std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 6}),
      InputError);
  CHECK_THROWS_AS(
      path_cost(inst, std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 8}),
      InputError);
}

TEST_CASE("trivial instances") {
  const TspInstance one = make_cnot_instance(parse_all({"XZ"}));
  CHECK(tsp_path(one) == std::vector<std::size_t>{0});
  CHECK(path_cost(one, std::vector<std::size_t>{0}) == 0.0);

  const TspInstance two = make_cnot_instance(parse_all({"XZ", "ZX"}));
  CHECK(tsp_path(two) == std::vector<std::size_t>{0, 1});

  CHECK_THROWS_AS(tsp_path(TspInstance{}), InputError);
}

TEST_CASE("small instances are solved optimally") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial % 6);
    const auto words = distinct_words(gen, 4, n);
    const TspInstance inst = make_cnot_instance(words);
    const auto order = tsp_path(inst);
    CHECK(path_cost(inst, order) ==
          doctest::Approx(oracles::brute_force_path_cost(inst.dist)));
  }
}

TEST_CASE("heuristic never loses to the lexicographic order") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 11 + static_cast<std::size_t>(trial % 5);
    const auto words = distinct_words(gen, 5, n);
    const TspInstance inst = make_cnot_instance(words);
    const auto order = tsp_path(inst);

    std::set<std::size_t> seen(order.begin(), order.end());
    CHECK(seen.size() == n);

    CHECK(path_cost(inst, order) <= lexicographic_cost(inst));
  }
}

TEST_CASE("tsp_path is deterministic") {
  std::mt19937_64 gen(13);
  const auto words = distinct_words(gen, 5, 14);
  const TspInstance inst = make_cnot_instance(words);
  const auto a = tsp_path(inst);
  const auto b = tsp_path(inst);
  CHECK(a == b);
}
