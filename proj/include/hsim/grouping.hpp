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

#include "hsim/hamiltonian.hpp"

namespace hsim {

// Pairwise commutation relations between the terms of a Hamiltonian.
// Vertices are term indices; an edge connects each commuting pair.
class CommutationGraph {
 public:
  explicit CommutationGraph(std::size_t n)
      : n_(n), adj_(n, std::vector<bool>(n, false)) {}

  std::size_t size() const { return n_; }
  bool adjacent(std::size_t a, std::size_t b) const { return adj_[a][b]; }
  void add_edge(std::size_t a, std::size_t b) {
    adj_[a][b] = true;
    adj_[b][a] = true;
  }
  std::size_t degree(std::size_t v) const;

 private:
  std::size_t n_;
  std::vector<std::vector<bool>> adj_;
};

CommutationGraph build_commutation_graph(const Hamiltonian& h);

// A partition of term indices into cliques of mutually commuting terms.
// Cliques are ordered by descending size (ties: smallest contained index
// first); members of each clique are ascending.
struct CliqueCover {
  std::vector<std::vector<std::size_t>> cliques;
};

// Greedy clique cover via coloring the complement graph, processing
// vertices by descending complement degree (ties: lower index first) and
// assigning the lowest color compatible with all previous assignments.
CliqueCover min_clique_cover(const CommutationGraph& g);

}  // namespace hsim
