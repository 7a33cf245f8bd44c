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

#include "hsim/pauli.hpp"

#include <bit>

#include "hsim/errors.hpp"

namespace hsim {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  throw InternalError("invalid Pauli symbol value");
}

PauliString::PauliString(int width) : width_(width) {
  if (width < 1 || width > kMaxWidth)
    throw InputError("Pauli string width must be in [1, 64], got " +
                     std::to_string(width));
}

PauliString PauliString::parse(std::string_view text) {
  PauliString result(static_cast<int>(text.size()));
  for (int q = 0; q < result.width_; ++q) {
    switch (text[static_cast<std::size_t>(q)]) {
      case 'I': break;
      case 'X': result.set(q, Pauli::X); break;
      case 'Y': result.set(q, Pauli::Y); break;
      case 'Z': result.set(q, Pauli::Z); break;
      default:
        throw InputError(std::string("invalid Pauli symbol '") +
                         text[static_cast<std::size_t>(q)] +
                         "' (expected one of I, X, Y, Z)");
    }
  }
  return result;
}

Pauli PauliString::at(int position) const {
  const std::uint64_t bit = std::uint64_t{1} << position;
  const unsigned x = (x_ & bit) ? 1u : 0u;
  const unsigned z = (z_ & bit) ? 2u : 0u;
  // (x, z) -> symbol: 0=I, 1=X, 3=Y, 2=Z
  static constexpr Pauli kFromBits[4] = {Pauli::I, Pauli::X, Pauli::Z,
                                         Pauli::Y};
  return kFromBits[x | z];
}

void PauliString::set(int position, Pauli p) {
  const std::uint64_t bit = std::uint64_t{1} << position;
  x_ &= ~bit;
  z_ &= ~bit;
  if (p == Pauli::X || p == Pauli::Y) x_ |= bit;
  if (p == Pauli::Z || p == Pauli::Y) z_ |= bit;
}

std::string PauliString::str() const {
  std::string text(static_cast<std::size_t>(width_), 'I');
  for (int q = 0; q < width_; ++q)
    text[static_cast<std::size_t>(q)] = pauli_char(at(q));
  return text;
}

bool PauliString::operator<(const PauliString& other) const {
  const int w = width_ < other.width_ ? width_ : other.width_;
  for (int q = 0; q < w; ++q) {
    const auto a = static_cast<std::uint8_t>(at(q));
    const auto b = static_cast<std::uint8_t>(other.at(q));
    if (a != b) return a < b;
  }
  return width_ < other.width_;
}

namespace {

void require_same_width(const PauliString& a, const PauliString& b,
                        const char* op) {
  if (a.width() != b.width())
    throw InputError(std::string(op) + ": width mismatch (" +
                     std::to_string(a.width()) + " vs " +
                     std::to_string(b.width()) + ")");
}

}  // namespace

bool commutes(const PauliString& a, const PauliString& b) {
  require_same_width(a, b, "commutes");
  // Symplectic inner product: each position with different non-I symbols
  // anticommutes; the words commute iff the anticommuting count is even.
  const int parity = std::popcount(a.x_bits() & b.z_bits()) ^
                     std::popcount(a.z_bits() & b.x_bits());
  return (parity & 1) == 0;
}

int hamming_weight(const PauliString& a) {
  return std::popcount(a.support());
}

int cnot_distance(const PauliString& a, const PauliString& b) {
  require_same_width(a, b, "cnot_distance");
  const std::uint64_t differs =
      (a.x_bits() ^ b.x_bits()) | (a.z_bits() ^ b.z_bits());
  const std::uint64_t both_active = a.support() & b.support();
  return std::popcount(differs) + std::popcount(differs & both_active);
}

int sequence_cnot_cost(std::span<const PauliString> order) {
  if (order.empty())
    throw InputError("sequence_cnot_cost: empty term sequence");
  int cost = hamming_weight(order.front()) + hamming_weight(order.back());
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    cost += cnot_distance(order[i], order[i + 1]);
  return cost;
}

}  // namespace hsim
