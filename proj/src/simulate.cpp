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

#include "hsim/simulate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "hsim/errors.hpp"

namespace hsim {

namespace {

using Complex = std::complex<double>;
using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

// Pauli position q <-> bit (width - 1 - q) of a data basis index.
std::uint64_t basis_mask(std::uint64_t position_mask, int width) {
  std::uint64_t out = 0;
  for (int q = 0; q < width; ++q)
    if (position_mask >> q & 1) out |= std::uint64_t{1} << (width - 1 - q);
  return out;
}

struct GateMatrix {
  Complex u00, u01, u10, u11;
};

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

GateMatrix basis_matrix(Pauli axis, bool in) {
  if (axis == Pauli::X)  // Hadamard both ways
    return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
  if (axis == Pauli::Y) {
    // V satisfies V Y V^dagger = Z; the out direction is V^dagger.
    if (in)
      return {kInvSqrt2, Complex(0, -kInvSqrt2), kInvSqrt2,
              Complex(0, kInvSqrt2)};
    return {kInvSqrt2, kInvSqrt2, Complex(0, kInvSqrt2),
            Complex(0, -kInvSqrt2)};
  }
  throw InternalError("basis change requested for a non-X/Y axis");
}

// Full-system bit index of a circuit qubit (ancilla = width -> bit 0).
int full_bit(int qubit, int width) {
  return qubit == width ? 0 : width - qubit;
}

// state <- (G on bit b) * state, applied to every column of m.
void apply_single_qubit_left(MatrixXcd& m, const GateMatrix& g, int b) {
  const auto n = static_cast<std::uint64_t>(m.rows());
  const std::uint64_t mask = std::uint64_t{1} << b;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (i & mask) continue;
    const auto i0 = static_cast<Index>(i);
    const auto i1 = static_cast<Index>(i | mask);
    for (Index col = 0; col < m.cols(); ++col) {
      const Complex a = m(i0, col);
      const Complex c = m(i1, col);
      m(i0, col) = g.u00 * a + g.u01 * c;
      m(i1, col) = g.u10 * a + g.u11 * c;
    }
  }
}

void apply_cnot_left(MatrixXcd& m, int control_bit, int target_bit) {
  const auto n = static_cast<std::uint64_t>(m.rows());
  const std::uint64_t cmask = std::uint64_t{1} << control_bit;
  const std::uint64_t tmask = std::uint64_t{1} << target_bit;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!(i & cmask) || (i & tmask)) continue;
    m.row(static_cast<Index>(i)).swap(m.row(static_cast<Index>(i | tmask)));
  }
}

void apply_rotz_left(MatrixXcd& m, double angle, int b) {
  const Complex lo = std::exp(Complex(0, -angle / 2));
  const Complex hi = std::exp(Complex(0, angle / 2));
  const auto n = static_cast<std::uint64_t>(m.rows());
  const std::uint64_t mask = std::uint64_t{1} << b;
  for (std::uint64_t i = 0; i < n; ++i)
    m.row(static_cast<Index>(i)) *= (i & mask) ? hi : lo;
}

void apply_gate_left(MatrixXcd& m, const Gate& g, int width) {
  switch (g.kind) {
    case GateKind::BasisIn:
      apply_single_qubit_left(m, basis_matrix(g.axis, true),
                              full_bit(g.qubit, width));
      break;
    case GateKind::BasisOut:
      apply_single_qubit_left(m, basis_matrix(g.axis, false),
                              full_bit(g.qubit, width));
      break;
    case GateKind::Cnot:
      apply_cnot_left(m, full_bit(g.qubit, width), full_bit(g.target, width));
      break;
    case GateKind::RotZ:
      apply_rotz_left(m, g.angle, full_bit(g.qubit, width));
      break;
  }
}

// rho <- G rho G^dagger.
void conjugate_gate(MatrixXcd& rho, const Gate& g, int width) {
  apply_gate_left(rho, g, width);
  MatrixXcd adj = rho.adjoint();
  apply_gate_left(adj, g, width);
  rho = adj.adjoint();
}

double require_unitary(const MatrixXcd& u, const char* what) {
  if (u.rows() != u.cols())
    throw InputError(std::string(what) + ": matrix is not square");
  const double defect =
      (u.adjoint() * u - MatrixXcd::Identity(u.rows(), u.cols()))
          .cwiseAbs()
          .maxCoeff();
  return defect;
}

}  // namespace

Eigen::MatrixXcd dense_hamiltonian(const Hamiltonian& h) {
  if (h.width() > kMaxUnitaryWidth)
    throw CapabilityError("dense simulation is capped at width 12, got " +
                          std::to_string(h.width()));
  const auto dim = Index{1} << h.width();
  MatrixXcd m = MatrixXcd::Zero(dim, dim);
  for (const PauliTerm& term : h.terms()) {
    const std::uint64_t bx = basis_mask(term.string.x_bits(), h.width());
    const std::uint64_t bz = basis_mask(term.string.z_bits(), h.width());
    const int ny = std::popcount(bx & bz);
    static constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const Complex base = term.coefficient * kIPow[ny % 4];
    for (std::uint64_t col = 0; col < static_cast<std::uint64_t>(dim); ++col) {
      const double sign = std::popcount(col & bz) % 2 == 0 ? 1.0 : -1.0;
      m(static_cast<Index>(col ^ bx), static_cast<Index>(col)) += base * sign;
    }
  }
  return m;
}

Eigen::MatrixXcd exact_evolution(const Hamiltonian& h, double t) {
  const MatrixXcd hm = dense_hamiltonian(h);
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(hm);
  if (es.info() != Eigen::Success)
    throw InternalError("Hermitian eigendecomposition failed");
  const VectorXcd phases =
      (es.eigenvalues().array().cast<Complex>() * Complex(0, -t))
          .exp()
          .matrix();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Eigen::MatrixXcd circuit_unitary(const Circuit& c) {
  if (c.width > kMaxUnitaryWidth)
    throw CapabilityError("dense simulation is capped at width 12, got " +
                          std::to_string(c.width));
  const auto dim = Index{1} << c.width;

  // Columns track the evolution of |x>_data (x) |0>_ancilla.
  MatrixXcd m = MatrixXcd::Zero(dim * 2, dim);
  for (Index x = 0; x < dim; ++x) m(x << 1, x) = 1.0;
  for (const Gate& g : c.gates) apply_gate_left(m, g, c.width);

  MatrixXcd effective(dim, dim);
  for (Index x = 0; x < dim; ++x) effective.row(x) = m.row(x << 1);
  if (require_unitary(effective, "circuit_unitary") > 1e-8)
    throw InternalError(
        "ancilla failed to disentangle: effective data-qubit map is not "
        "unitary");
  return effective;
}

double diamond_distance_unitary(const Eigen::MatrixXcd& u,
                                const Eigen::MatrixXcd& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw InputError("diamond_distance_unitary: dimension mismatch");
  if (require_unitary(u, "diamond_distance_unitary") > 1e-8 ||
      require_unitary(v, "diamond_distance_unitary") > 1e-8)
    throw InputError("diamond_distance_unitary: input is not unitary");

  Eigen::ComplexEigenSolver<MatrixXcd> es(u.adjoint() * v, false);
  if (es.info() != Eigen::Success)
    throw InternalError("eigendecomposition failed");

  std::vector<double> angles(static_cast<std::size_t>(es.eigenvalues().size()));
  for (std::size_t k = 0; k < angles.size(); ++k) {
    const Complex lambda = es.eigenvalues()(static_cast<Index>(k));
    angles[k] = std::atan2(lambda.imag(), lambda.real());
  }
  std::sort(angles.begin(), angles.end());

  // The hull of unit-circle points misses the origin iff some cyclic gap
  // between consecutive angles exceeds pi; the remaining arc S then gives
  // hull distance cos(S/2).
  const double two_pi = 2 * std::numbers::pi;
  double max_gap = angles.front() + two_pi - angles.back();
  for (std::size_t k = 1; k < angles.size(); ++k)
    max_gap = std::max(max_gap, angles[k] - angles[k - 1]);

  if (max_gap <= std::numbers::pi) return 2.0;
  const double arc = two_pi - max_gap;
  return 2.0 * std::sin(arc / 2.0);
}

double trotter_error(const Hamiltonian& h, const Ordering& order, double t,
                     int r) {
  return diamond_distance_unitary(circuit_unitary(trotterize(h, order, t, r)),
                                  exact_evolution(h, t));
}

namespace {

// Tr over `bit` of rho, tensored back with I/2 on that bit.
MatrixXcd depolarize_bit(const MatrixXcd& rho, int bit) {
  const auto dim = rho.rows();
  MatrixXcd out = MatrixXcd::Zero(dim, dim);
  const auto mask = Index{1} << bit;
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) {
      if ((i & mask) != (j & mask)) continue;
      const Index ti = i & ~mask;
      const Index tj = j & ~mask;
      out(i, j) = 0.5 * (rho(ti, tj) + rho(ti | mask, tj | mask));
    }
  return out;
}

// Tr over both bits of rho, tensored back with I/4 on them.
MatrixXcd depolarize_pair(const MatrixXcd& rho, int bit_a, int bit_b) {
  const auto dim = rho.rows();
  const auto ma = Index{1} << bit_a;
  const auto mb = Index{1} << bit_b;
  MatrixXcd out = MatrixXcd::Zero(dim, dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) {
      if ((i & ma) != (j & ma) || (i & mb) != (j & mb)) continue;
      const Index ti = i & ~(ma | mb);
      const Index tj = j & ~(ma | mb);
      Complex sum = 0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const Index off = (a ? ma : 0) | (b ? mb : 0);
          sum += rho(ti | off, tj | off);
        }
      out(i, j) = 0.25 * sum;
    }
  return out;
}

void record_stats(const MatrixXcd& rho, NoiseStats* stats) {
  if (!stats) return;
  stats->max_trace_deviation =
      std::max(stats->max_trace_deviation, std::abs(rho.trace().real() - 1.0) +
                                               std::abs(rho.trace().imag()));
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  stats->min_eigenvalue =
      std::min(stats->min_eigenvalue, es.eigenvalues().minCoeff());
}

}  // namespace

Eigen::VectorXd noisy_distribution(const Circuit& c,
                                   const Eigen::VectorXcd& initial, double p,
                                   NoiseModel model, NoiseStats* stats) {
  if (c.width > kMaxDensityWidth)
    throw CapabilityError(
        "density-matrix simulation is capped at width 6, got " +
        std::to_string(c.width));
  if (!(p >= 0.0 && p <= 1.0))
    throw InputError("noise probability must be in [0, 1]");
  const auto dim = Index{1} << c.width;
  if (initial.size() != dim)
    throw InputError("initial state has dimension " +
                     std::to_string(initial.size()) + ", expected " +
                     std::to_string(dim));
  if (std::abs(initial.norm() - 1.0) > 1e-8)
    throw InputError("initial state is not normalized");

  MatrixXcd rho = MatrixXcd::Zero(dim * 2, dim * 2);
  for (Index x = 0; x < dim; ++x)
    for (Index y = 0; y < dim; ++y)
      rho(x << 1, y << 1) = initial(x) * std::conj(initial(y));

  if (stats) *stats = NoiseStats{0.0, 0.0};
  record_stats(rho, stats);
  for (const Gate& g : c.gates) {
    conjugate_gate(rho, g, c.width);
    if (g.kind != GateKind::Cnot) continue;
    const int cb = full_bit(g.qubit, c.width);
    const int tb = full_bit(g.target, c.width);
    switch (model) {
      case NoiseModel::TwoQubitEvent:
        rho = (1.0 - p) * rho + p * depolarize_pair(rho, cb, tb);
        break;
      case NoiseModel::IndependentSingleQubit:
        rho = (1.0 - p) * rho + p * depolarize_bit(rho, cb);
        rho = (1.0 - p) * rho + p * depolarize_bit(rho, tb);
        break;
    }
    record_stats(rho, stats);
  }

  VectorXd prob(dim);
  for (Index x = 0; x < dim; ++x)
    prob(x) =
        rho(x << 1, x << 1).real() + rho((x << 1) | 1, (x << 1) | 1).real();
  return prob;
}

double hellinger_distance(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
  if (p.size() != q.size())
    throw InputError("hellinger_distance: size mismatch (" +
                     std::to_string(p.size()) + " vs " +
                     std::to_string(q.size()) + ")");
  double sum = 0.0;
  for (Index i = 0; i < p.size(); ++i) {
    if (p(i) < -1e-9 || q(i) < -1e-9)
      throw InputError("hellinger_distance: negative probability");
    const double d =
        std::sqrt(std::max(p(i), 0.0)) - std::sqrt(std::max(q(i), 0.0));
    sum += d * d;
  }
  return std::sqrt(sum / 2.0);
}

double hellinger_infidelity(const Eigen::VectorXd& p, const Eigen::VectorXd& q,
                            InfidelityConvention convention) {
  const double hd = hellinger_distance(p, q);
  switch (convention) {
    case InfidelityConvention::SquaredFidelity: {
      const double fid = 1.0 - hd * hd;
      return 1.0 - fid * fid;
    }
    case InfidelityConvention::OneMinusDistance:
      return 1.0 - hd;
  }
  throw InternalError("hellinger_infidelity: bad convention value");
}

Eigen::VectorXcd initial_state(std::string_view spec, int width) {
  if (width < 1 || width > kMaxUnitaryWidth)
    throw CapabilityError("initial_state: width must be in [1, 12]");
  const auto dim = Index{1} << width;
  VectorXcd state = VectorXcd::Zero(dim);

  if (spec == "zero") {
    state(0) = 1.0;
    return state;
  }
  if (spec == "plus") {
    state.setConstant(1.0 / std::sqrt(static_cast<double>(dim)));
    return state;
  }
  if (spec == "ghz-like") {
    // ceil(w/2) leading zeros then ones, superposed with its complement.
    const int ones = width / 2;
    const auto low = (Index{1} << ones) - 1;
    const auto high = ((Index{1} << (width - ones)) - 1) << ones;
    state(low) = kInvSqrt2;
    state(high) = kInvSqrt2;
    return state;
  }
  if (spec.starts_with("basis:")) {
    const std::string digits(spec.substr(6));
    std::size_t consumed = 0;
    long long k = -1;
    try {
      k = std::stoll(digits, &consumed);
    } catch (const std::exception&) {
      throw InputError("initial_state: bad basis index '" + digits + "'");
    }
    if (consumed != digits.size() || k < 0 || k >= dim)
      throw InputError("initial_state: basis index out of range [0, " +
                       std::to_string(dim - 1) + "]");
    state(static_cast<Index>(k)) = 1.0;
    return state;
  }
  throw InputError("unknown initial state '" + std::string(spec) +
                   "' (expected zero, plus, ghz-like, or basis:k)");
}

}  // namespace hsim
