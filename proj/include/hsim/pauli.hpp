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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hsim {

// Single-qubit Pauli symbol. The numeric order I < X < Y < Z is the symbol
// order used for every lexicographic comparison in the project (it matches
// the ASCII order of the letters).
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);

/// A fixed-width word of Pauli symbols, one per qubit ("XZZ", "IXIY", ...).
///
/// Stored symplectically as two bit masks (x, z) with bit q describing
/// position q: I=(0,0), X=(1,0), Y=(1,1), Z=(0,1). This keeps commutation
/// tests, Hamming weights and gate-interface distances a handful of bit
/// operations regardless of width. Width is limited to 64 positions.
///
/// Position 0 is the leftmost symbol of the text form and corresponds to the
/// most significant bit of computational-basis indices everywhere in the
/// simulator.
class PauliString {
 public:
  static constexpr int kMaxWidth = 64;

  // All-identity word of the given width.
  explicit PauliString(int width);

  // Parses a text form like "XZZI". Throws InputError on bad symbols or
  // width outside [1, 64].
  static PauliString parse(std::string_view text);

  int width() const { return width_; }
  Pauli at(int position) const;
  void set(int position, Pauli p);

  // Canonical text form, e.g. "XZZ".
  std::string str() const;

  std::uint64_t x_bits() const { return x_; }
  std::uint64_t z_bits() const { return z_; }
  std::uint64_t support() const { return x_ | z_; }  // non-I positions

  bool operator==(const PauliString& other) const = default;

  // Position-by-position comparison under I < X < Y < Z, leftmost position
  // most significant; shorter widths compare before longer on a tie.
  bool operator<(const PauliString& other) const;

 private:
  PauliString(int width, std::uint64_t x, std::uint64_t z)
      : width_(width), x_(x), z_(z) {}

  int width_ = 1;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;

  friend struct PauliStringBits;
};

// Raw-bits constructor escape hatch for generators that already produce
// valid masks.
struct PauliStringBits {
  static PauliString make(int width, std::uint64_t x, std::uint64_t z) {
    return PauliString(width, x, z);
  }
};

/// One Hamiltonian summand: a real coefficient times a Pauli word.
struct PauliTerm {
  double coefficient = 0.0;
  PauliString string;
};

// True iff the two Pauli words commute as operators: the number of positions
// where they hold different non-identity symbols is even. Widths must match.
bool commutes(const PauliString& a, const PauliString& b);

// Number of non-identity positions.
int hamming_weight(const PauliString& a);

// Two-qubit-gate cost of the interface between consecutive subcircuits for
// a and b, after all cancellations: each differing position contributes 1,
// or 2 when neither side is I. Symmetric; zero iff a == b. Widths must
// match.
int cnot_distance(const PauliString& a, const PauliString& b);

// Total two-qubit-gate count of the cancelled single-pass circuit for the
// given word sequence: weight of the first word, plus the interface distance
// of each consecutive pair, plus the weight of the last word. The sequence
// must be non-empty with uniform width.
int sequence_cnot_cost(std::span<const PauliString> order);

}  // namespace hsim
