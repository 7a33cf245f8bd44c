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

#include "hsim/grouping.hpp"

#include <algorithm>
#include <numeric>

namespace hsim {

std::size_t CommutationGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t u = 0; u < n_; ++u)
    if (adj_[v][u]) ++d;
  return d;
}

CommutationGraph build_commutation_graph(const Hamiltonian& h) {
  CommutationGraph g(h.size());
  for (std::size_t a = 0; a < h.size(); ++a)
    for (std::size_t b = a + 1; b < h.size(); ++b)
      if (commutes(h.term(a).string, h.term(b).string)) g.add_edge(a, b);
  return g;
}

CliqueCover min_clique_cover(const CommutationGraph& g) {
  const std::size_t n = g.size();

  // Coloring the complement graph partitions vertices into cliques of g.
  // Complement degree = (n - 1) - degree, so descending complement degree
  // is ascending degree in g.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return g.degree(a) < g.degree(b);
                   });

  constexpr std::size_t kUncolored = ~std::size_t{0};
  std::vector<std::size_t> color(n, kUncolored);
  std::size_t n_colors = 0;
  for (const std::size_t v : order) {
    std::vector<bool> blocked(n_colors + 1, false);
    for (std::size_t u = 0; u < n; ++u)
      if (color[u] != kUncolored && !g.adjacent(v, u)) blocked[color[u]] = true;
    std::size_t c = 0;
    while (blocked[c]) ++c;
    color[v] = c;
    n_colors = std::max(n_colors, c + 1);
  }

  CliqueCover cover;
  cover.cliques.resize(n_colors);
  for (std::size_t v = 0; v < n; ++v) cover.cliques[color[v]].push_back(v);
  for (auto& clique : cover.cliques)
    std::sort(clique.begin(), clique.end());
  std::stable_sort(cover.cliques.begin(), cover.cliques.end(),
                   [](const auto& a, const auto& b) {
                     if (a.size() != b.size()) return a.size() > b.size();
                     return a.front() < b.front();
                   });
  return cover;
}

}  // namespace hsim
