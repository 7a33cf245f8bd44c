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
#include <string>
#include <vector>

#include "hsim/hamiltonian.hpp"
#include "hsim/ordering.hpp"

namespace hsim {

enum class GateKind { BasisIn, BasisOut, Cnot, RotZ };

// One gate of the ancilla-parity construction. Data qubits are indexed
// 0..width-1; the ancilla is qubit `width`. Cnot controls are always data
// qubits and target the ancilla; RotZ acts only on the ancilla.
struct Gate {
  GateKind kind = GateKind::RotZ;
  Pauli axis = Pauli::I;  // BasisIn/BasisOut: X or Y
  int qubit = 0;          // BasisIn/BasisOut: data qubit; Cnot: control; RotZ: ancilla
  int target = 0;         // Cnot only: ancilla index
  double angle = 0.0;     // RotZ only, radians

  static Gate basis_in(Pauli axis, int qubit);
  static Gate basis_out(Pauli axis, int qubit);
  static Gate cnot(int control, int ancilla);
  static Gate rot_z(double angle, int ancilla);

  bool operator==(const Gate& other) const = default;
};

struct Circuit {
  int width = 0;  // data qubits; the ancilla is qubit `width`
  std::vector<Gate> gates;
  int trotter_steps = 1;
  double time = 0.0;
};

// One uncancelled Trotter step: for each term in `order`, basis changes
// into the Z frame, a CNOT parity ladder onto the ancilla (ascending
// qubits), RotZ(2 * coefficient * dt), the mirrored ladder (descending) and
// the basis changes back.
Circuit synthesize_step(const Hamiltonian& h, const Ordering& order,
                        double dt);

// Structural cancellation pass. At each interface between consecutive term
// subcircuits, every qubit on which both terms carry the same non-identity
// symbol loses its CNOT pair and its BasisOut/BasisIn pair. The circuit
// must consist of term subcircuits in the exact synthesized normal form
// matching `order` cyclically, or InputError is thrown. The circuit
// unitary is unchanged.
Circuit cancel_gates(const Circuit& c, const Hamiltonian& h,
                     const Ordering& order);

// Cancelled circuit for r Trotter steps of duration t/r each. Interfaces
// between repeated steps are cancelled like any other interface.
Circuit trotterize(const Hamiltonian& h, const Ordering& order, double t,
                   int r);

std::size_t cnot_count(const Circuit& c);

// Plain-text gate list, one gate per line (`h q0`, `basis-y-in q2`,
// `cx q0 anc`, `rz 0.5 anc`).
std::string emit_gate_list(const Circuit& c);

}  // namespace hsim
