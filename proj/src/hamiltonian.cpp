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

#include "hsim/hamiltonian.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "hsim/errors.hpp"
#include "hsim/rng.hpp"

namespace hsim {

Hamiltonian Hamiltonian::from_terms(std::vector<PauliTerm> terms) {
  if (terms.empty()) throw InputError("Hamiltonian has no terms");

  const int width = terms.front().string.width();
  for (const auto& t : terms) {
    if (t.string.width() != width)
      throw InputError("Hamiltonian width mismatch: expected " +
                       std::to_string(width) + ", got " +
                       std::to_string(t.string.width()) + " for term " +
                       t.string.str());
    if (!std::isfinite(t.coefficient))
      throw InputError("non-finite coefficient for term " + t.string.str());
  }

  // Merge duplicates into their first appearance, drop identities and
  // exact-zero sums.
  std::vector<PauliTerm> merged;
  merged.reserve(terms.size());
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> seen;
  for (const auto& t : terms) {
    if (t.string.support() == 0) continue;
    const auto key = std::make_pair(t.string.x_bits(), t.string.z_bits());
    const auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, merged.size());
      merged.push_back(t);
    } else {
      merged[it->second].coefficient += t.coefficient;
    }
  }
  std::erase_if(merged, [](const PauliTerm& t) { return t.coefficient == 0.0; });

  if (merged.empty())
    throw InputError(
        "Hamiltonian is empty after dropping identity terms and merged "
        "cancellations");

  Hamiltonian h;
  h.terms_ = std::move(merged);
  h.width_ = width;
  return h;
}

namespace {

std::string format_coefficient(double c) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", c);
  return buf;
}

}  // namespace

Hamiltonian parse_hamiltonian(std::istream& in) {
  std::vector<PauliTerm> terms;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);

    std::istringstream fields(line);
    std::string coef_text, word_text, extra;
    if (!(fields >> coef_text)) continue;  // blank or comment-only line

    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!(fields >> word_text))
      throw InputError(where + "expected `<coefficient> <pauli word>`");
    if (fields >> extra)
      throw InputError(where + "trailing content after Pauli word: '" +
                       extra + "'");

    double coefficient = 0.0;
    std::size_t consumed = 0;
    try {
      coefficient = std::stod(coef_text, &consumed);
    } catch (const std::exception&) {
      throw InputError(where + "invalid coefficient '" + coef_text + "'");
    }
    if (consumed != coef_text.size())
      throw InputError(where + "invalid coefficient '" + coef_text + "'");
    if (!std::isfinite(coefficient))
      throw InputError(where + "non-finite coefficient '" + coef_text + "'");

    PauliString word(1);
    try {
      word = PauliString::parse(word_text);
    } catch (const InputError& e) {
      throw InputError(where + e.what());
    }
    if (!terms.empty() && word.width() != terms.front().string.width())
      throw InputError(where + "width mismatch: expected " +
                       std::to_string(terms.front().string.width()) +
                       " symbols, got " + std::to_string(word.width()));

    terms.push_back(PauliTerm{coefficient, word});
  }

  try {
    return Hamiltonian::from_terms(std::move(terms));
  } catch (const InputError& e) {
    throw InputError(std::string(e.what()) + " (after reading " +
                     std::to_string(line_no) + " lines)");
  }
}

Hamiltonian parse_hamiltonian(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_hamiltonian(in);
}

Hamiltonian load_hamiltonian(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open Hamiltonian file: " + path);
  try {
    return parse_hamiltonian(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string serialize_hamiltonian(const Hamiltonian& h) {
  std::string out;
  for (const auto& t : h.terms()) {
    out += format_coefficient(t.coefficient);
    out += ' ';
    out += t.string.str();
    out += '\n';
  }
  return out;
}

Hamiltonian random_hamiltonian(int width, int n_terms, std::uint64_t seed) {
  if (width < 1 || width > PauliString::kMaxWidth)
    throw InputError("random_hamiltonian: width must be in [1, 64]");
  if (n_terms < 1) throw InputError("random_hamiltonian: n_terms must be >= 1");
  // 4^width - 1 non-identity words exist; widths >= 32 cannot overflow a
  // realistic request.
  if (width < 32 &&
      static_cast<std::uint64_t>(n_terms) > (std::uint64_t{1} << (2 * width)) - 1)
    throw InputError("random_hamiltonian: n_terms exceeds the 4^width - 1 "
                     "distinct non-identity words at width " +
                     std::to_string(width));

  std::mt19937_64 gen(seed);
  const std::uint64_t mask =
      width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;

  std::vector<PauliTerm> terms;
  terms.reserve(static_cast<std::size_t>(n_terms));
  std::unordered_set<std::uint64_t> used;  // packed (x, z) for width <= 32
  std::vector<std::pair<std::uint64_t, std::uint64_t>> used_wide;

  auto is_new = [&](std::uint64_t x, std::uint64_t z) {
    if (width <= 32) return used.insert((x << width) | z).second;
    for (const auto& [ux, uz] : used_wide)
      if (ux == x && uz == z) return false;
    used_wide.emplace_back(x, z);
    return true;
  };

  while (static_cast<int>(terms.size()) < n_terms) {
    const std::uint64_t x = gen() & mask;  // x mask drawn first, then z
    const std::uint64_t z = gen() & mask;
    if ((x | z) == 0) continue;
    if (!is_new(x, z)) continue;
    double c = rng::uniform_pm1(gen);
    while (c == 0.0) c = rng::uniform_pm1(gen);
    terms.push_back(PauliTerm{c, PauliStringBits::make(width, x, z)});
  }

  return Hamiltonian::from_terms(std::move(terms));
}

}  // namespace hsim
