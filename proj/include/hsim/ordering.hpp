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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hsim/hamiltonian.hpp"

namespace hsim {

enum class Strategy {
  Lexicographic,
  Magnitude,
  Random,
  DepleteGroups,
  MaxCommuteTsp,
};

// CLI names: lex, mag, random, deplete, mctsp.
std::string_view strategy_name(Strategy s);
Strategy parse_strategy(std::string_view name);

// A full ordering of a Hamiltonian's terms. clique_boundaries is populated
// only by MaxCommuteTsp: M+1 offsets into the permutation (first 0, last
// the term count) delimiting blocks of mutually commuting terms.
struct Ordering {
  Strategy strategy = Strategy::Lexicographic;
  std::uint64_t seed = 0;
  std::vector<std::size_t> permutation;
  std::vector<std::size_t> clique_boundaries;
};

Ordering order_lexicographic(const Hamiltonian& h);
Ordering order_magnitude(const Hamiltonian& h);
Ordering order_random(const Hamiltonian& h, std::uint64_t seed);
Ordering order_deplete_groups(const Hamiltonian& h);
Ordering order_max_commute_tsp(const Hamiltonian& h);

// Dispatch on strategy; `seed` matters only for Strategy::Random.
Ordering make_ordering(const Hamiltonian& h, Strategy s, std::uint64_t seed = 0);

// Strings of h in ordering order.
std::vector<PauliString> ordered_strings(const Hamiltonian& h,
                                         const Ordering& ordering);

}  // namespace hsim
