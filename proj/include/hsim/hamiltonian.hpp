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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hsim/pauli.hpp"

namespace hsim {

/// A qubit Hamiltonian: a non-empty, coefficient-weighted list of Pauli
/// words of uniform width.
///
/// Construction normalizes the term list so every downstream pass may assume
/// clean input: all-identity words are dropped (they contribute only a
/// global phase), duplicate words are merged by summing coefficients in
/// first-appearance order, and terms whose merged coefficient is exactly
/// zero are removed. An empty result, a width mismatch, or a non-finite
/// coefficient is an InputError.
class Hamiltonian {
 public:
  static Hamiltonian from_terms(std::vector<PauliTerm> terms);

  const std::vector<PauliTerm>& terms() const { return terms_; }
  const PauliTerm& term(std::size_t i) const { return terms_[i]; }
  std::size_t size() const { return terms_.size(); }
  int width() const { return width_; }

 private:
  Hamiltonian() = default;

  std::vector<PauliTerm> terms_;
  int width_ = 0;
};

// Text format, one term per line: `<coefficient> <pauli word>`. `#` starts
// a comment; blank lines are ignored. Errors carry 1-based line numbers.
Hamiltonian parse_hamiltonian(std::istream& in);
Hamiltonian parse_hamiltonian(std::string_view text);
Hamiltonian load_hamiltonian(const std::string& path);

// Inverse of parse_hamiltonian up to float formatting; coefficients are
// printed with 17 significant digits so the round trip is exact.
std::string serialize_hamiltonian(const Hamiltonian& h);

// Deterministic test-support generator: n_terms distinct non-identity words
// drawn uniformly, coefficients uniform in [-1, 1] excluding exact zero.
// Seeded via std::mt19937_64 (see rng.hpp for the portable mappings).
// Requires n_terms <= 4^width - 1.
Hamiltonian random_hamiltonian(int width, int n_terms, std::uint64_t seed);

}  // namespace hsim
