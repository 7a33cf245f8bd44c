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

#include <string_view>

#include <Eigen/Dense>

#include "hsim/circuit.hpp"
#include "hsim/hamiltonian.hpp"
#include "hsim/ordering.hpp"

namespace hsim {

// Dense-simulation width caps. Unitary propagation allocates 2^(w+1) rows;
// density matrices square that.
inline constexpr int kMaxUnitaryWidth = 12;
inline constexpr int kMaxDensityWidth = 6;

// Basis-state bit convention used by every dense routine: Pauli position q
// (leftmost symbol = position 0) is bit width-1-q of a data basis index;
// the ancilla, when present, is the least significant bit of a full index.

// Dense Pauli sum of h as a Hermitian matrix.
Eigen::MatrixXcd dense_hamiltonian(const Hamiltonian& h);

// exp(-i t H) via Hermitian eigendecomposition. Width > 12 is refused with
// CapabilityError.
Eigen::MatrixXcd exact_evolution(const Hamiltonian& h, double t);

// Effective data-qubit unitary of the circuit: the full (width+1)-qubit
// unitary sandwiched between ancilla |0>. Throws InternalError if the
// ancilla fails to disentangle (the result would not be unitary).
Eigen::MatrixXcd circuit_unitary(const Circuit& c);

// Diamond distance between the unitary channels of u and v, in [0, 2].
// Computed in closed form from the eigenvalues of u^dagger v: the distance
// d from the origin to their convex hull gives 2*sqrt(1 - d^2). Inputs
// must be unitary to 1e-8 (InputError otherwise). Invariant under global
// phase of either argument.
double diamond_distance_unitary(const Eigen::MatrixXcd& u,
                                const Eigen::MatrixXcd& v);

// diamond_distance_unitary(circuit_unitary(trotterize(h, order, t, r)),
//                          exact_evolution(h, t)).
double trotter_error(const Hamiltonian& h, const Ordering& order, double t,
                     int r);

enum class NoiseModel {
  // One depolarizing event per CNOT: with probability p both the control
  // and the target are replaced by the maximally mixed state together.
  TwoQubitEvent,
  // Independent single-qubit depolarizing with probability p on the
  // control and on the target after each CNOT.
  IndependentSingleQubit,
};

struct NoiseStats {
  double max_trace_deviation = 0.0;
  double min_eigenvalue = 0.0;
};

// Density-matrix evolution of |initial><initial| (x) |0><0|_ancilla through
// the circuit, depolarizing after each CNOT, returning computational-basis
// probabilities of the data qubits with the ancilla traced out. Width > 6
// is refused with CapabilityError. When `stats` is given, trace deviation
// and the smallest eigenvalue are tracked across every noise application.
Eigen::VectorXd noisy_distribution(const Circuit& c,
                                   const Eigen::VectorXcd& initial, double p,
                                   NoiseModel model = NoiseModel::TwoQubitEvent,
                                   NoiseStats* stats = nullptr);

// (1/sqrt(2)) * l2-norm of (sqrt(p) - sqrt(q)). Values in [0, 1].
double hellinger_distance(const Eigen::VectorXd& p, const Eigen::VectorXd& q);

enum class InfidelityConvention {
  // 1 - (1 - H^2)^2: one minus the squared Hellinger fidelity. Zero for
  // identical distributions.
  SquaredFidelity,
  // The literal 1 - H. One for identical distributions.
  OneMinusDistance,
};

double hellinger_infidelity(
    const Eigen::VectorXd& p, const Eigen::VectorXd& q,
    InfidelityConvention convention = InfidelityConvention::SquaredFidelity);

// Named initial states for noisy runs: "zero", "plus", "ghz-like"
// ((|0...01...1> + |1...10...0>)/sqrt(2) with ceil(w/2) leading symbols),
// or "basis:k" for the k-th computational basis state.
Eigen::VectorXcd initial_state(std::string_view spec, int width);

}  // namespace hsim
