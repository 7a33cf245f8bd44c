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

#include "hsim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "hsim/errors.hpp"

namespace hsim {

Gate Gate::basis_in(Pauli axis, int qubit) {
  return Gate{GateKind::BasisIn, axis, qubit, 0, 0.0};
}

Gate Gate::basis_out(Pauli axis, int qubit) {
  return Gate{GateKind::BasisOut, axis, qubit, 0, 0.0};
}

Gate Gate::cnot(int control, int ancilla) {
  return Gate{GateKind::Cnot, Pauli::I, control, ancilla, 0.0};
}

Gate Gate::rot_z(double angle, int ancilla) {
  return Gate{GateKind::RotZ, Pauli::I, ancilla, 0, angle};
}

namespace {

std::vector<int> support_qubits(const PauliString& s) {
  std::vector<int> qubits;
  for (int q = 0; q < s.width(); ++q)
    if (s.at(q) != Pauli::I) qubits.push_back(q);
  return qubits;
}

void emit_basis(std::vector<Gate>& gates, const PauliString& s, bool in,
                const PauliString* skip_shared_with = nullptr) {
  for (int q = 0; q < s.width(); ++q) {
    const Pauli p = s.at(q);
    if (p != Pauli::X && p != Pauli::Y) continue;
    if (skip_shared_with && skip_shared_with->at(q) == p) continue;
    gates.push_back(in ? Gate::basis_in(p, q) : Gate::basis_out(p, q));
  }
}

void emit_ladder(std::vector<Gate>& gates, const PauliString& s,
                 bool ascending, const PauliString* skip_shared_with) {
  std::vector<int> qubits = support_qubits(s);
  if (!ascending) std::reverse(qubits.begin(), qubits.end());
  for (const int q : qubits) {
    if (skip_shared_with && skip_shared_with->at(q) == s.at(q)) continue;
    gates.push_back(Gate::cnot(q, s.width()));
  }
}

// A term subcircuit recovered from a gate stream.
struct TermBlock {
  PauliString string{1};
  double angle = 0.0;
};

// Parses `gates` as a sequence of synthesized term subcircuits:
// BasisIn gates (ascending qubits), ascending CNOT ladder, one RotZ,
// descending CNOT ladder mirroring it, BasisOut gates mirroring BasisIn.
std::vector<TermBlock> parse_blocks(const Circuit& c) {
  const auto fail = [](std::size_t pos, const std::string& what) -> void {
    throw InputError("circuit is not in synthesized form at gate " +
                     std::to_string(pos) + ": " + what);
  };

  std::vector<TermBlock> blocks;
  std::size_t i = 0;
  const auto& g = c.gates;
  while (i < g.size()) {
    TermBlock block{PauliString(c.width), 0.0};

    std::size_t pos = i;
    int prev_qubit = -1;
    while (pos < g.size() && g[pos].kind == GateKind::BasisIn) {
      if (g[pos].qubit <= prev_qubit)
        fail(pos, "basis-change qubits not strictly ascending");
      if (g[pos].axis != Pauli::X && g[pos].axis != Pauli::Y)
        fail(pos, "basis change must be on the X or Y axis");
      block.string.set(g[pos].qubit, g[pos].axis);
      prev_qubit = g[pos].qubit;
      ++pos;
    }

    std::vector<int> ladder;
    prev_qubit = -1;
    while (pos < g.size() && g[pos].kind == GateKind::Cnot) {
      if (g[pos].target != c.width) fail(pos, "CNOT must target the ancilla");
      if (g[pos].qubit <= prev_qubit)
        fail(pos, "CNOT controls not strictly ascending");
      ladder.push_back(g[pos].qubit);
      prev_qubit = g[pos].qubit;
      ++pos;
    }
    if (ladder.empty()) fail(pos, "expected an ascending CNOT ladder");
    for (const int q : ladder)
      if (block.string.at(q) == Pauli::I) block.string.set(q, Pauli::Z);

    if (pos >= g.size() || g[pos].kind != GateKind::RotZ)
      fail(pos, "expected one RotZ on the ancilla");
    if (g[pos].qubit != c.width) fail(pos, "RotZ must act on the ancilla");
    block.angle = g[pos].angle;
    ++pos;

    for (auto it = ladder.rbegin(); it != ladder.rend(); ++it, ++pos) {
      if (pos >= g.size() || g[pos].kind != GateKind::Cnot ||
          g[pos].qubit != *it || g[pos].target != c.width)
        fail(pos, "descending CNOT ladder does not mirror the ascending one");
    }

    for (int q = 0; q < c.width; ++q) {
      const Pauli p = block.string.at(q);
      if (p != Pauli::X && p != Pauli::Y) continue;
      if (pos >= g.size() || g[pos].kind != GateKind::BasisOut ||
          g[pos].qubit != q || g[pos].axis != p)
        fail(pos, "basis restores do not mirror the basis changes");
      ++pos;
    }

    // Every basis change must sit on a ladder qubit.
    for (int q = 0; q < c.width; ++q) {
      const Pauli p = block.string.at(q);
      if ((p == Pauli::X || p == Pauli::Y) &&
          std::find(ladder.begin(), ladder.end(), q) == ladder.end())
        fail(i, "basis change on a qubit outside the CNOT ladder");
    }

    blocks.push_back(std::move(block));
    i = pos;
  }
  return blocks;
}

void emit_block(std::vector<Gate>& gates, const PauliString& s, double angle,
                int width, const PauliString* shared_before,
                const PauliString* shared_after) {
  emit_basis(gates, s, true, shared_before);
  emit_ladder(gates, s, true, shared_before);
  gates.push_back(Gate::rot_z(angle, width));
  emit_ladder(gates, s, false, shared_after);
  emit_basis(gates, s, false, shared_after);
}

}  // namespace

Circuit synthesize_step(const Hamiltonian& h, const Ordering& order,
                        double dt) {
  if (!std::isfinite(dt)) throw InputError("synthesize_step: dt must be finite");
  if (order.permutation.size() != h.size())
    throw InputError("synthesize_step: ordering does not match Hamiltonian");

  Circuit c;
  c.width = h.width();
  c.trotter_steps = 1;
  c.time = dt;
  for (const std::size_t t : order.permutation) {
    const PauliTerm& term = h.term(t);
    emit_block(c.gates, term.string, 2.0 * term.coefficient * dt, c.width,
               nullptr, nullptr);
  }
  return c;
}

Circuit cancel_gates(const Circuit& c, const Hamiltonian& h,
                     const Ordering& order) {
  if (order.permutation.size() != h.size())
    throw InputError("cancel_gates: ordering does not match Hamiltonian");
  if (c.width != h.width())
    throw InputError("cancel_gates: circuit width does not match Hamiltonian");

  const std::vector<TermBlock> blocks = parse_blocks(c);
  const std::size_t n = h.size();
  if (blocks.empty() || blocks.size() % n != 0)
    throw InputError("cancel_gates: expected a whole number of ordering "
                     "repetitions, got " +
                     std::to_string(blocks.size()) + " term subcircuits");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const PauliString& expected = h.term(order.permutation[i % n]).string;
    if (blocks[i].string != expected)
      throw InputError("cancel_gates: term subcircuit " + std::to_string(i) +
                       " implements " + blocks[i].string.str() +
                       ", expected " + expected.str());
  }

  Circuit out;
  out.width = c.width;
  out.trotter_steps = c.trotter_steps;
  out.time = c.time;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const PauliString* before = i > 0 ? &blocks[i - 1].string : nullptr;
    const PauliString* after =
        i + 1 < blocks.size() ? &blocks[i + 1].string : nullptr;
    emit_block(out.gates, blocks[i].string, blocks[i].angle, out.width,
               before, after);
  }
  return out;
}

Circuit trotterize(const Hamiltonian& h, const Ordering& order, double t,
                   int r) {
  if (r < 1) throw InputError("trotterize: Trotter number must be >= 1");
  if (!std::isfinite(t)) throw InputError("trotterize: time must be finite");

  const Circuit step = synthesize_step(h, order, t / r);
  Circuit full;
  full.width = step.width;
  full.trotter_steps = r;
  full.time = t;
  full.gates.reserve(step.gates.size() * static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k)
    full.gates.insert(full.gates.end(), step.gates.begin(), step.gates.end());

  Circuit cancelled = cancel_gates(full, h, order);
  cancelled.trotter_steps = r;
  cancelled.time = t;
  return cancelled;
}

std::size_t cnot_count(const Circuit& c) {
  return static_cast<std::size_t>(
      std::count_if(c.gates.begin(), c.gates.end(), [](const Gate& g) {
        return g.kind == GateKind::Cnot;
      }));
}

std::string emit_gate_list(const Circuit& c) {
  std::string out;
  char buf[64];
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::BasisIn:
        if (g.axis == Pauli::X)
          out += "h q" + std::to_string(g.qubit);
        else
          out += "basis-y-in q" + std::to_string(g.qubit);
        break;
      case GateKind::BasisOut:
        if (g.axis == Pauli::X)
          out += "h q" + std::to_string(g.qubit);
        else
          out += "basis-y-out q" + std::to_string(g.qubit);
        break;
      case GateKind::Cnot:
        out += "cx q" + std::to_string(g.qubit) + " anc";
        break;
      case GateKind::RotZ:
        std::snprintf(buf, sizeof buf, "%.17g", g.angle);
        out += "rz ";
        out += buf;
        out += " anc";
        break;
    }
    out += '\n';
  }
  return out;
}

}  // namespace hsim
