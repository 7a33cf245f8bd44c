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

#include "hsim/sequencer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace hsim {

Eigen::MatrixXd pair_cost_table(const Hamiltonian& h,
                                const CliqueCover& cover) {
  const auto m = static_cast<Eigen::Index>(cover.cliques.size());
  Eigen::MatrixXd table = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = i + 1; j < m; ++j) {
      double cost = 0.0;
      for (const std::size_t a : cover.cliques[static_cast<std::size_t>(i)])
        for (const std::size_t b : cover.cliques[static_cast<std::size_t>(j)])
          if (!commutes(h.term(a).string, h.term(b).string))
            cost += std::abs(h.term(a).coefficient * h.term(b).coefficient);
      table(i, j) = cost;
      table(j, i) = cost;
    }
  return table;
}

Eigen::MatrixXi clique_edge_counts(const CommutationGraph& g,
                                   const CliqueCover& cover) {
  const auto m = static_cast<Eigen::Index>(cover.cliques.size());
  Eigen::MatrixXi counts = Eigen::MatrixXi::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = i + 1; j < m; ++j) {
      int edges = 0;
      for (const std::size_t a : cover.cliques[static_cast<std::size_t>(i)])
        for (const std::size_t b : cover.cliques[static_cast<std::size_t>(j)])
          if (g.adjacent(a, b)) ++edges;
      counts(i, j) = edges;
      counts(j, i) = edges;
    }
  return counts;
}

std::vector<std::vector<std::size_t>> sequence_candidates(
    const Eigen::MatrixXi& edge_counts) {
  const auto m = static_cast<std::size_t>(edge_counts.rows());

  std::vector<std::vector<std::size_t>> candidates;
  candidates.reserve(m * (m - 1) + 1);

  std::vector<std::size_t> identity(m);
  std::iota(identity.begin(), identity.end(), 0);
  candidates.push_back(identity);
  if (m < 2) return candidates;

  for (std::size_t root = 0; root < m; ++root) {
    for (std::size_t second = 0; second < m; ++second) {
      if (second == root) continue;
      std::vector<std::size_t> perm{root, second};
      std::vector<bool> used(m, false);
      used[root] = true;
      used[second] = true;
      while (perm.size() < m) {
        const auto last = static_cast<Eigen::Index>(perm.back());
        std::size_t pick = m;
        int pick_edges = -1;
        for (std::size_t c = 0; c < m; ++c) {
          if (used[c]) continue;
          const int edges = edge_counts(last, static_cast<Eigen::Index>(c));
          if (edges > pick_edges) {
            pick_edges = edges;
            pick = c;
          }
        }
        used[pick] = true;
        perm.push_back(pick);
      }
      candidates.push_back(std::move(perm));
    }
  }
  return candidates;
}

double sequence_score(const Eigen::MatrixXd& costs,
                      const std::vector<std::size_t>& perm) {
  double score = 0.0;
  for (std::size_t i = 0; i + 1 < perm.size(); ++i)
    score += costs(static_cast<Eigen::Index>(perm[i]),
                   static_cast<Eigen::Index>(perm[i + 1]));
  return score;
}

std::vector<std::size_t> sequence_cliques(const Hamiltonian& h,
                                          const CliqueCover& cover,
                                          const CommutationGraph& g) {
  const Eigen::MatrixXd costs = pair_cost_table(h, cover);
  const Eigen::MatrixXi edges = clique_edge_counts(g, cover);

  std::vector<std::size_t> best;
  double best_score = std::numeric_limits<double>::infinity();
  for (const auto& candidate : sequence_candidates(edges)) {
    const double score = sequence_score(costs, candidate);
    if (score < best_score) {
      best_score = score;
      best = candidate;
    }
  }
  return best;
}

}  // namespace hsim
