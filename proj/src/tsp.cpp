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

#include <algorithm>
#include <limits>
#include <numeric>
#include <tuple>

#include "hsim/errors.hpp"

namespace hsim {

TspInstance make_cnot_instance(std::span<const PauliString> strings) {
  const auto n = static_cast<Eigen::Index>(strings.size());
  TspInstance inst;
  inst.nodes.assign(strings.begin(), strings.end());
  inst.dist = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = a + 1; b < n; ++b) {
      const double d = cnot_distance(strings[static_cast<std::size_t>(a)],
                                     strings[static_cast<std::size_t>(b)]);
      inst.dist(a, b) = d;
      inst.dist(b, a) = d;
    }
  return inst;
}

namespace {

double raw_path_cost(const TspInstance& inst,
                     std::span<const std::size_t> path) {
  double cost = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    cost += inst.dist(static_cast<Eigen::Index>(path[i]),
                      static_cast<Eigen::Index>(path[i + 1]));
  return cost;
}

}  // namespace

double path_cost(const TspInstance& inst, std::span<const std::size_t> path) {
  std::vector<bool> seen(inst.size(), false);
  if (path.size() != inst.size())
    throw InputError("path_cost: path is not a permutation of the nodes");
  for (const std::size_t v : path) {
    if (v >= inst.size() || seen[v])
      throw InputError("path_cost: path is not a permutation of the nodes");
    seen[v] = true;
  }
  return raw_path_cost(inst, path);
}

namespace {

std::vector<std::size_t> exhaustive_path(const TspInstance& inst) {
  const std::size_t n = inst.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  std::vector<std::size_t> best = perm;
  double best_cost = raw_path_cost(inst, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    if (perm.front() > perm.back()) continue;  // reversal already visited
    const double cost = raw_path_cost(inst, perm);
    if (cost < best_cost) {
      best_cost = cost;
      best = perm;
    }
  }
  return best;
}

// Node indices sorted by their Pauli words, the fallback candidate every
// solve must beat or match.
std::vector<std::size_t> lexicographic_candidate(const TspInstance& inst) {
  std::vector<std::size_t> order(inst.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return inst.nodes[a] < inst.nodes[b];
  });
  return order;
}

std::vector<std::pair<std::size_t, std::size_t>> prim_mst(
    const TspInstance& inst) {
  const std::size_t n = inst.size();
  std::vector<bool> in_tree(n, false);
  std::vector<double> best_dist(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> best_parent(n, 0);
  in_tree[0] = true;
  for (std::size_t v = 1; v < n; ++v)
    best_dist[v] = inst.dist(0, static_cast<Eigen::Index>(v));

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(n - 1);
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!in_tree[v] && (pick == n || best_dist[v] < best_dist[pick]))
        pick = v;
    in_tree[pick] = true;
    edges.emplace_back(best_parent[pick], pick);
    for (std::size_t v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      const double d = inst.dist(static_cast<Eigen::Index>(pick),
                                 static_cast<Eigen::Index>(v));
      if (d < best_dist[v]) {
        best_dist[v] = d;
        best_parent[v] = pick;
      }
    }
  }
  return edges;
}

// Pair up odd-degree vertices greedily by ascending (distance, i, j).
std::vector<std::pair<std::size_t, std::size_t>> greedy_matching(
    const TspInstance& inst, std::vector<std::size_t> odd) {
  std::vector<std::tuple<double, std::size_t, std::size_t>> candidates;
  for (std::size_t a = 0; a < odd.size(); ++a)
    for (std::size_t b = a + 1; b < odd.size(); ++b)
      candidates.emplace_back(inst.dist(static_cast<Eigen::Index>(odd[a]),
                                        static_cast<Eigen::Index>(odd[b])),
                              odd[a], odd[b]);
  std::sort(candidates.begin(), candidates.end());

  std::vector<bool> matched(inst.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [d, i, j] : candidates) {
    if (matched[i] || matched[j]) continue;
    matched[i] = true;
    matched[j] = true;
    pairs.emplace_back(i, j);
  }
  return pairs;
}

// Euler tour of the multigraph given by adjacency multiset `multi`,
// always following the smallest-index available neighbor.
std::vector<std::size_t> euler_tour(
    std::vector<std::vector<std::size_t>> multi) {
  for (auto& nbrs : multi) std::sort(nbrs.begin(), nbrs.end());

  std::vector<std::size_t> stack{0};
  std::vector<std::size_t> tour;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    if (multi[v].empty()) {
      tour.push_back(v);
      stack.pop_back();
    } else {
      const std::size_t u = multi[v].front();
      multi[v].erase(multi[v].begin());
      auto back_edge = std::find(multi[u].begin(), multi[u].end(), v);
      multi[u].erase(back_edge);
      stack.push_back(u);
    }
  }
  std::reverse(tour.begin(), tour.end());
  return tour;
}

// 2-opt on a cycle: reverse cycle[i..j] while any such move strictly
// improves the closed-tour cost. Moves are scanned in ascending (i, j)
// order and restarted after each accepted move.
void two_opt(const TspInstance& inst, std::vector<std::size_t>& cycle) {
  const std::size_t n = cycle.size();
  auto d = [&](std::size_t a, std::size_t b) {
    return inst.dist(static_cast<Eigen::Index>(cycle[a]),
                     static_cast<Eigen::Index>(cycle[b]));
  };
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 0; i + 1 < n && !improved; ++i) {
      for (std::size_t j = i + 1; j < n && !improved; ++j) {
        if (i == 0 && j == n - 1) continue;  // same tour, reversed
        const std::size_t before = (i + n - 1) % n;
        const std::size_t after = (j + 1) % n;
        const double delta =
            d(before, j) + d(i, after) - d(before, i) - d(j, after);
        if (delta < -1e-12) {
          std::reverse(cycle.begin() + static_cast<std::ptrdiff_t>(i),
                       cycle.begin() + static_cast<std::ptrdiff_t>(j) + 1);
          improved = true;
        }
      }
    }
  }
}

std::vector<std::size_t> constructed_path(const TspInstance& inst) {
  const std::size_t n = inst.size();

  std::vector<std::vector<std::size_t>> multi(n);
  for (const auto& [a, b] : prim_mst(inst)) {
    multi[a].push_back(b);
    multi[b].push_back(a);
  }
  std::vector<std::size_t> odd;
  for (std::size_t v = 0; v < n; ++v)
    if (multi[v].size() % 2 == 1) odd.push_back(v);
  for (const auto& [a, b] : greedy_matching(inst, std::move(odd))) {
    multi[a].push_back(b);
    multi[b].push_back(a);
  }

  // Shortcut the Euler tour to a Hamiltonian cycle.
  std::vector<bool> visited(n, false);
  std::vector<std::size_t> cycle;
  cycle.reserve(n);
  for (const std::size_t v : euler_tour(std::move(multi))) {
    if (visited[v]) continue;
    visited[v] = true;
    cycle.push_back(v);
  }

  two_opt(inst, cycle);

  // Open the cycle: drop the heaviest edge (ties: smallest position),
  // counting the wraparound edge as position n - 1.
  std::size_t cut = 0;
  double cut_cost = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double c = inst.dist(static_cast<Eigen::Index>(cycle[i]),
                               static_cast<Eigen::Index>(cycle[(i + 1) % n]));
    if (c > cut_cost) {
      cut_cost = c;
      cut = i;
    }
  }
  std::vector<std::size_t> path;
  path.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) path.push_back(cycle[(cut + i) % n]);

  if (path.front() > path.back()) std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::vector<std::size_t> tsp_path(const TspInstance& inst) {
  const std::size_t n = inst.size();
  if (n == 0) throw InputError("tsp_path: empty instance");
  if (inst.dist.rows() != inst.dist.cols() ||
      static_cast<std::size_t>(inst.dist.rows()) != n)
    throw InputError("tsp_path: distance matrix does not match the nodes");
  if (n <= 2) {
    std::vector<std::size_t> path(n);
    std::iota(path.begin(), path.end(), 0);
    return path;
  }
  if (n <= 10) return exhaustive_path(inst);

  std::vector<std::size_t> fallback = lexicographic_candidate(inst);
  std::vector<std::size_t> built = constructed_path(inst);
  return raw_path_cost(inst, built) <= raw_path_cost(inst, fallback)
             ? built
             : fallback;
}

}  // namespace hsim
