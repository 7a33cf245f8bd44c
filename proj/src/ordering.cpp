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

#include "hsim/ordering.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "hsim/errors.hpp"
#include "hsim/grouping.hpp"
#include "hsim/rng.hpp"
#include "hsim/sequencer.hpp"
#include "hsim/tsp.hpp"

namespace hsim {

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Lexicographic: return "lex";
    case Strategy::Magnitude: return "mag";
    case Strategy::Random: return "random";
    case Strategy::DepleteGroups: return "deplete";
    case Strategy::MaxCommuteTsp: return "mctsp";
  }
  throw InternalError("strategy_name: bad enum value");
}

Strategy parse_strategy(std::string_view name) {
  if (name == "lex") return Strategy::Lexicographic;
  if (name == "mag") return Strategy::Magnitude;
  if (name == "random") return Strategy::Random;
  if (name == "deplete") return Strategy::DepleteGroups;
  if (name == "mctsp") return Strategy::MaxCommuteTsp;
  throw InputError("unknown strategy '" + std::string(name) +
                   "' (expected lex, mag, random, deplete, or mctsp)");
}

namespace {

std::vector<std::size_t> identity_permutation(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  return perm;
}

}  // namespace

Ordering order_lexicographic(const Hamiltonian& h) {
  Ordering o;
  o.strategy = Strategy::Lexicographic;
  o.permutation = identity_permutation(h.size());
  std::sort(o.permutation.begin(), o.permutation.end(),
            [&](std::size_t a, std::size_t b) {
              return h.term(a).string < h.term(b).string;
            });
  return o;
}

Ordering order_magnitude(const Hamiltonian& h) {
  Ordering o;
  o.strategy = Strategy::Magnitude;
  o.permutation = identity_permutation(h.size());
  std::sort(o.permutation.begin(), o.permutation.end(),
            [&](std::size_t a, std::size_t b) {
              const double ma = std::abs(h.term(a).coefficient);
              const double mb = std::abs(h.term(b).coefficient);
              if (ma != mb) return ma > mb;
              return h.term(a).string < h.term(b).string;
            });
  return o;
}

Ordering order_random(const Hamiltonian& h, std::uint64_t seed) {
  Ordering o;
  o.strategy = Strategy::Random;
  o.seed = seed;
  o.permutation = identity_permutation(h.size());
  // Fisher-Yates with the portable index draw; std::shuffle's use of the
  // engine is implementation-defined.
  std::mt19937_64 gen(seed);
  for (std::size_t i = h.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng::uniform_below(gen, i));
    std::swap(o.permutation[i - 1], o.permutation[j]);
  }
  return o;
}

Ordering order_deplete_groups(const Hamiltonian& h) {
  const CliqueCover cover = min_clique_cover(build_commutation_graph(h));

  // Sort each clique so its highest-magnitude remaining term is popped
  // first; magnitude ties fall back to lexicographic string order.
  std::vector<std::vector<std::size_t>> queues;
  queues.reserve(cover.cliques.size());
  for (const auto& clique : cover.cliques) {
    auto queue = clique;
    std::sort(queue.begin(), queue.end(), [&](std::size_t a, std::size_t b) {
      const double ma = std::abs(h.term(a).coefficient);
      const double mb = std::abs(h.term(b).coefficient);
      if (ma != mb) return ma > mb;
      return h.term(a).string < h.term(b).string;
    });
    queues.push_back(std::move(queue));
  }

  Ordering o;
  o.strategy = Strategy::DepleteGroups;
  o.permutation.reserve(h.size());
  std::vector<std::size_t> next(queues.size(), 0);
  while (o.permutation.size() < h.size()) {
    for (std::size_t q = 0; q < queues.size(); ++q) {
      if (next[q] < queues[q].size()) o.permutation.push_back(queues[q][next[q]++]);
    }
  }
  return o;
}

Ordering order_max_commute_tsp(const Hamiltonian& h) {
  const CommutationGraph graph = build_commutation_graph(h);
  const CliqueCover cover = min_clique_cover(graph);

  // Order the terms inside each clique by open-path TSP on CNOT distance.
  std::vector<std::vector<std::size_t>> internal;
  internal.reserve(cover.cliques.size());
  for (const auto& clique : cover.cliques) {
    std::vector<PauliString> strings;
    strings.reserve(clique.size());
    for (const std::size_t t : clique) strings.push_back(h.term(t).string);
    std::vector<std::size_t> ordered;
    ordered.reserve(clique.size());
    for (const std::size_t local : tsp_path(make_cnot_instance(strings)))
      ordered.push_back(clique[local]);
    internal.push_back(std::move(ordered));
  }

  const std::vector<std::size_t> seq = sequence_cliques(h, cover, graph);

  // A path and its reverse carry the same internal cost, so each clique's
  // traversal direction is free. A two-state DP over the clique cycle picks
  // directions minimizing the summed junction distances, including the
  // wrap-around junction that repeated Trotter steps expose; forward
  // preferred on ties.
  const std::size_t m = seq.size();
  const auto head = [&](std::size_t i, int dir) {
    const auto& block = internal[seq[i]];
    return h.term(dir == 0 ? block.front() : block.back()).string;
  };
  const auto tail = [&](std::size_t i, int dir) {
    const auto& block = internal[seq[i]];
    return h.term(dir == 0 ? block.back() : block.front()).string;
  };
  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  std::vector<int> direction(m, 0);
  int best_total = kInf;
  for (int start = 0; start < 2 && m > 0; ++start) {
    std::vector<std::array<int, 2>> cost(m, {kInf, kInf});
    std::vector<std::array<int, 2>> prev(m, {0, 0});
    cost[0][start] = 0;
    for (std::size_t i = 1; i < m; ++i) {
      for (int dir = 0; dir < 2; ++dir) {
        for (int from = 0; from < 2; ++from) {
          if (cost[i - 1][from] >= kInf) continue;
          const int c = cost[i - 1][from] +
                        cnot_distance(tail(i - 1, from), head(i, dir));
          if (c < cost[i][dir]) {
            cost[i][dir] = c;
            prev[i][dir] = from;
          }
        }
      }
    }
    for (int last = 0; last < 2; ++last) {
      const int total =
          cost[m - 1][last] + (m > 1 ? cnot_distance(tail(m - 1, last),
                                                     head(0, start))
                                     : 0);
      if (total < best_total) {
        best_total = total;
        direction[m - 1] = last;
        for (std::size_t i = m - 1; i > 0; --i)
          direction[i - 1] = prev[i][direction[i]];
        direction[0] = start;
      }
    }
  }

  Ordering o;
  o.strategy = Strategy::MaxCommuteTsp;
  o.permutation.reserve(h.size());
  o.clique_boundaries.reserve(cover.cliques.size() + 1);
  o.clique_boundaries.push_back(0);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& block = internal[seq[i]];
    if (direction[i] == 0)
      o.permutation.insert(o.permutation.end(), block.begin(), block.end());
    else
      o.permutation.insert(o.permutation.end(), block.rbegin(), block.rend());
    o.clique_boundaries.push_back(o.permutation.size());
  }
  return o;
}

Ordering make_ordering(const Hamiltonian& h, Strategy s, std::uint64_t seed) {
  switch (s) {
    case Strategy::Lexicographic: return order_lexicographic(h);
    case Strategy::Magnitude: return order_magnitude(h);
    case Strategy::Random: return order_random(h, seed);
    case Strategy::DepleteGroups: return order_deplete_groups(h);
    case Strategy::MaxCommuteTsp: return order_max_commute_tsp(h);
  }
  throw InternalError("make_ordering: bad enum value");
}

std::vector<PauliString> ordered_strings(const Hamiltonian& h,
                                         const Ordering& ordering) {
  std::vector<PauliString> strings;
  strings.reserve(ordering.permutation.size());
  for (const std::size_t t : ordering.permutation)
    strings.push_back(h.term(t).string);
  return strings;
}

}  // namespace hsim
