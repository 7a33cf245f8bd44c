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

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hsim/pauli.hpp"

namespace hsim {

// Open-path travelling-salesman instance: one node per Pauli word, edges
// weighted by cnot_distance (symmetric, zero diagonal, metric).
struct TspInstance {
  std::vector<PauliString> nodes;
  Eigen::MatrixXd dist;

  std::size_t size() const { return nodes.size(); }
};

TspInstance make_cnot_instance(std::span<const PauliString> strings);

// Total edge cost of visiting every node once in `path` order (no return
// edge). Throws InputError if `path` is not a permutation of the nodes.
double path_cost(const TspInstance& inst, std::span<const std::size_t> path);

// Deterministic open-path TSP solver.
//
// Up to 10 nodes the optimum is found by exhaustive search (reversals are
// not enumerated twice; among optimal paths the first in enumeration order
// wins). Above 10 nodes a tour is constructed from a minimum spanning
// tree, a greedy matching on odd-degree vertices, and an Euler-tour
// shortcut, then improved with 2-opt; the heaviest tour edge is removed to
// open the cycle into a path. The nodes in lexicographic word order are
// always evaluated as a fallback candidate, so the result never costs more
// than the lexicographic ordering.
std::vector<std::size_t> tsp_path(const TspInstance& inst);

}  // namespace hsim
