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
#include <vector>

#include <Eigen/Dense>

#include "hsim/grouping.hpp"
#include "hsim/hamiltonian.hpp"

namespace hsim {

// Entry (i, j): sum of |c_a * c_b| over cross-clique term pairs
// (a in clique i, b in clique j) that fail to commute. Symmetric with a
// zero diagonal.
Eigen::MatrixXd pair_cost_table(const Hamiltonian& h, const CliqueCover& cover);

// Entry (i, j): number of commutation-graph edges between clique i and
// clique j. Symmetric with a zero diagonal.
Eigen::MatrixXi clique_edge_counts(const CommutationGraph& g,
                                   const CliqueCover& cover);

// Candidate clique permutations: the identity order first, then for every
// ordered pair (root, second) a greedy completion that repeatedly appends
// the unused clique sharing the most commutation edges with the most
// recently appended one (ties: lower clique index).
std::vector<std::vector<std::size_t>> sequence_candidates(
    const Eigen::MatrixXi& edge_counts);

// Cost of visiting cliques in `perm` order: sum of pair costs over
// consecutive cliques.
double sequence_score(const Eigen::MatrixXd& costs,
                      const std::vector<std::size_t>& perm);

// Picks the candidate permutation with the smallest pair-cost score.
// Earlier candidates win ties, so the identity order is returned unless a
// greedy completion is strictly better.
std::vector<std::size_t> sequence_cliques(const Hamiltonian& h,
                                          const CliqueCover& cover,
                                          const CommutationGraph& g);

}  // namespace hsim
