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

#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "hsim/grouping.hpp"
#include "hsim/hamiltonian.hpp"
#include "hsim/pauli.hpp"

using hsim::build_commutation_graph;
using hsim::clique_edge_counts;
using hsim::CliqueCover;
using hsim::CommutationGraph;
using hsim::Hamiltonian;
using hsim::min_clique_cover;
using hsim::pair_cost_table;
using hsim::sequence_candidates;
using hsim::sequence_cliques;
using hsim::sequence_score;

TEST_CASE("pair cost of an anticommuting singleton pair is the product") {
  // XXX and XXZ anticommute (one anticommuting position), so the cover is
  // two singletons and the cross entry is |0.5 * 0.25|.
  const Hamiltonian h = hsim::parse_hamiltonian("0.5 XXX\n0.25 XXZ\n");
  const CliqueCover cover = min_clique_cover(build_commutation_graph(h));
  REQUIRE(cover.cliques.size() == 2);
  const Eigen::MatrixXd costs = pair_cost_table(h, cover);
  CHECK(costs(0, 0) == 0.0);
  CHECK(costs(1, 1) == 0.0);
  CHECK(costs(0, 1) == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(costs(1, 0) == costs(0, 1));
}

TEST_CASE("fully commuting cross pairs contribute nothing") {
  // XXX and XZZ commute; force them into separate cliques to exercise the
  // empty-sum case directly.
  const Hamiltonian h = hsim::parse_hamiltonian("0.5 XXX\n0.25 XZZ\n");
  CliqueCover cover;
  cover.cliques = {{0}, {1}};
  const Eigen::MatrixXd costs = pair_cost_table(h, cover);
  CHECK(costs(0, 1) == 0.0);
  CHECK(costs(1, 0) == 0.0);
}

TEST_CASE("tables are symmetric with zero diagonals on random instances") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Hamiltonian h = hsim::random_hamiltonian(3, 8, seed);
    const CommutationGraph g = build_commutation_graph(h);
    const CliqueCover cover = min_clique_cover(g);
    const Eigen::MatrixXd costs = pair_cost_table(h, cover);
    const Eigen::MatrixXi edges = clique_edge_counts(g, cover);
    const auto m = static_cast<Eigen::Index>(cover.cliques.size());
    REQUIRE(costs.rows() == m);
    REQUIRE(edges.rows() == m);
    for (Eigen::Index i = 0; i < m; ++i) {
      CHECK(costs(i, i) == 0.0);
      CHECK(edges(i, i) == 0);
      for (Eigen::Index j = 0; j < m; ++j) {
        CHECK(costs(i, j) == costs(j, i));
        CHECK(costs(i, j) >= 0.0);
        CHECK(edges(i, j) == edges(j, i));
        const auto bound =
            cover.cliques[static_cast<std::size_t>(i)].size() *
            cover.cliques[static_cast<std::size_t>(j)].size();
        CHECK(edges(i, j) <= static_cast<int>(bound));
      }
    }
  }
}

TEST_CASE("table scoring equals the direct double sum") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    const Hamiltonian h = hsim::random_hamiltonian(4, 10, seed);
    const CommutationGraph g = build_commutation_graph(h);
    const CliqueCover cover = min_clique_cover(g);
    const Eigen::MatrixXd costs = pair_cost_table(h, cover);
    const auto perm = sequence_cliques(h, cover, g);

    double direct = 0.0;
    for (std::size_t k = 0; k + 1 < perm.size(); ++k) {
      for (const std::size_t a : cover.cliques[perm[k]])
        for (const std::size_t b : cover.cliques[perm[k + 1]])
          if (!commutes(h.term(a).string, h.term(b).string))
            direct += std::abs(h.term(a).coefficient * h.term(b).coefficient);
    }
    CHECK(sequence_score(costs, perm) == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("candidate set is well-formed") {
  for (std::uint64_t seed = 200; seed < 230; ++seed) {
    const Hamiltonian h = hsim::random_hamiltonian(3, 9, seed);
    const CommutationGraph g = build_commutation_graph(h);
    const CliqueCover cover = min_clique_cover(g);
    const Eigen::MatrixXi edges = clique_edge_counts(g, cover);
    const auto candidates = sequence_candidates(edges);
    const std::size_t m = cover.cliques.size();

    CHECK(candidates.size() <= m * (m - 1) + 1);
    if (m >= 2) CHECK(candidates.size() >= m);

    std::vector<std::size_t> identity(m);
    for (std::size_t i = 0; i < m; ++i) identity[i] = i;
    REQUIRE(!candidates.empty());
    CHECK(candidates.front() == identity);

    for (const auto& cand : candidates) {
      const std::set<std::size_t> unique(cand.begin(), cand.end());
      CHECK(unique.size() == m);
    }
  }
}

TEST_CASE("trivial clique counts") {
  const Hamiltonian h1 = hsim::parse_hamiltonian("1.0 XY\n");
  const CommutationGraph g1 = build_commutation_graph(h1);
  const CliqueCover c1 = min_clique_cover(g1);
  CHECK(sequence_cliques(h1, c1, g1) == std::vector<std::size_t>{0});

  // Two anticommuting singletons: both orders score equally, tie keeps the
  // identity.
  const Hamiltonian h2 = hsim::parse_hamiltonian("0.5 XXX\n0.25 XXZ\n");
  const CommutationGraph g2 = build_commutation_graph(h2);
  const CliqueCover c2 = min_clique_cover(g2);
  REQUIRE(c2.cliques.size() == 2);
  CHECK(sequence_cliques(h2, c2, g2) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("returned permutation minimizes over the candidate set") {
  for (std::uint64_t seed = 300; seed < 340; ++seed) {
    const Hamiltonian h = hsim::random_hamiltonian(4, 12, seed);
    const CommutationGraph g = build_commutation_graph(h);
    const CliqueCover cover = min_clique_cover(g);
    const Eigen::MatrixXd costs = pair_cost_table(h, cover);
    const Eigen::MatrixXi edges = clique_edge_counts(g, cover);

    const auto chosen = sequence_cliques(h, cover, g);
    const double chosen_score = sequence_score(costs, chosen);
    for (const auto& cand : sequence_candidates(edges))
      CHECK(chosen_score <= sequence_score(costs, cand));

    CHECK(sequence_cliques(h, cover, g) == chosen);
  }
}
