// Copyright 2026 The demonlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "demonlab/qstate/statevector.hpp"

#include <fmt/format.h>

#include <array>
#include <bit>
#include <cmath>

#include "demonlab/common/error.hpp"
#include "demonlab/pauli/matrix.hpp"
#include "demonlab/qstate/register_layout.hpp"

namespace demonlab::qstate {

namespace {

using Mat2 = std::array<Complex, 4>;  // row-major {u00, u01, u10, u11}

std::uint64_t mask_of(std::span<const int> qubits) {
    std::uint64_t m = 0;
    for (int q : qubits) m |= 1ULL << q;
    return m;
}

Mat2 gate_matrix(Gate gate) {
    const double c = std::cos(gate.angle / 2);
    const double s = std::sin(gate.angle / 2);
    const Complex i(0.0, 1.0);
    switch (gate.kind) {
        case GateKind::kH: {
            const double r = 1.0 / std::sqrt(2.0);
            return {r, r, r, -r};
        }
        case GateKind::kCNOT: return {0.0, 1.0, 1.0, 0.0};
        case GateKind::kRX:
        case GateKind::kCRX: return {c, -i * s, -i * s, c};
        case GateKind::kRY:
        case GateKind::kCRY: return {c, -s, s, c};
        case GateKind::kRZ: return {std::exp(-i * (gate.angle / 2)), 0.0, 0.0, std::exp(i * (gate.angle / 2))};
    }
    throw InvalidArgument("unknown gate kind");
}

bool needs_control(GateKind kind) {
    return kind == GateKind::kCNOT || kind == GateKind::kCRX || kind == GateKind::kCRY;
}

void apply_1q(std::vector<Complex>& amps, const Mat2& u, int target, std::uint64_t on_mask,
              std::uint64_t off_mask) {
    const std::uint64_t tbit = 1ULL << target;
    const std::uint64_t dim = amps.size();
    for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & tbit) || (i & on_mask) != on_mask || (i & off_mask)) continue;
        const Complex a0 = amps[i];
        const Complex a1 = amps[i | tbit];
        amps[i] = u[0] * a0 + u[1] * a1;
        amps[i | tbit] = u[2] * a0 + u[3] * a1;
    }
}

void check_tau(double tau) {
    if (!(tau >= 0.0)) throw InvalidArgument(fmt::format("evolution time must be >= 0, got {}", tau));
}

}  // namespace

Statevector::Statevector(int n) : n_(n) {
    if (n < 1 || n > kMaxQubits) {
        throw DimensionError(fmt::format("statevector qubit count must be in [1, {}], got {}", kMaxQubits, n));
    }
    amps_.assign(std::size_t{1} << n, Complex(0.0, 0.0));
    amps_[0] = 1.0;
}

Statevector Statevector::from_amplitudes(std::vector<Complex> amps) {
    const std::size_t dim = amps.size();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw DimensionError(fmt::format("amplitude count {} is not a power of two >= 2", dim));
    }
    const int n = std::countr_zero(dim);
    if (n > kMaxQubits) throw DimensionError(fmt::format("{} qubits exceeds the dense limit", n));
    double sq = 0.0;
    for (const Complex& a : amps) sq += std::norm(a);
    if (std::abs(sq - 1.0) > kNormTolerance) {
        throw InvalidState(fmt::format("amplitudes have squared norm {:.17g}", sq));
    }
    return Statevector(n, std::move(amps));
}

Statevector Statevector::basis_state(int n, std::uint64_t index) {
    Statevector s(n);
    if (index >= s.dim()) throw InvalidArgument(fmt::format("basis index {} out of range", index));
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

double Statevector::norm() const {
    double sq = 0.0;
    for (const Complex& a : amps_) sq += std::norm(a);
    return std::sqrt(sq);
}

Statevector Statevector::tensor(const Statevector& high) const {
    const int n = n_ + high.n_;
    if (n > kMaxQubits) throw DimensionError(fmt::format("{} qubits exceeds the dense limit", n));
    std::vector<Complex> out(std::size_t{1} << n);
    for (std::size_t h = 0; h < high.dim(); ++h) {
        for (std::size_t l = 0; l < dim(); ++l) out[(h << n_) | l] = high.amps_[h] * amps_[l];
    }
    return Statevector(n, std::move(out));
}

std::string Statevector::debug_json() const {
    std::string out = fmt::format("{{\"n\": {}, \"amps\": [", n_);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        out += fmt::format("{}[{:.17g}, {:.17g}]", i ? ", " : "", amps_[i].real(), amps_[i].imag());
    }
    return out + "]}";
}

Statevector apply_gate(const Statevector& state, Gate gate, std::span<const int> targets,
                       std::span<const int> controls, std::span<const int> anti_controls) {
    if (targets.empty()) throw InvalidArgument("gate needs at least one target");
    if (needs_control(gate.kind) && controls.empty()) {
        throw InvalidArgument("controlled gate applied without a control qubit");
    }
    std::vector<int> all(targets.begin(), targets.end());
    all.insert(all.end(), controls.begin(), controls.end());
    all.insert(all.end(), anti_controls.begin(), anti_controls.end());
    check_qubits(all, state.num_qubits());

    Statevector out = state;
    const Mat2 u = gate_matrix(gate);
    const std::uint64_t on = mask_of(controls);
    const std::uint64_t off = mask_of(anti_controls);
    for (int t : targets) apply_1q(out.raw(), u, t, on, off);
    return out;
}

Propagator::Propagator(const pauli::PauliSum& h) : n_(h.num_qubits()) {
    const Eigen::MatrixXcd m = pauli::pauli_to_matrix(h, n_);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) throw Error("Hamiltonian eigendecomposition failed");
    energies_ = solver.eigenvalues();
    vectors_ = solver.eigenvectors();
}

Eigen::MatrixXcd Propagator::unitary(double tau) const {
    const Complex minus_i(0.0, -1.0);
    Eigen::VectorXcd phases(energies_.size());
    for (Eigen::Index k = 0; k < energies_.size(); ++k) phases[k] = std::exp(minus_i * (energies_[k] * tau));
    return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

void apply_matrix_inplace(Statevector& state, const Eigen::MatrixXcd& u, std::span<const int> targets,
                          std::span<const int> controls) {
    const std::size_t m = targets.size();
    const Eigen::Index sub = Eigen::Index{1} << m;
    if (u.rows() != sub || u.cols() != sub) {
        throw DimensionError(fmt::format("{}x{} matrix does not act on {} target qubits", u.rows(), u.cols(), m));
    }
    std::vector<int> all(targets.begin(), targets.end());
    all.insert(all.end(), controls.begin(), controls.end());
    check_qubits(all, state.num_qubits());

    std::vector<std::uint64_t> offsets(static_cast<std::size_t>(sub));
    for (std::size_t k = 0; k < offsets.size(); ++k) {
        std::uint64_t off = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if ((k >> j) & 1) off |= 1ULL << targets[j];
        }
        offsets[k] = off;
    }
    const std::uint64_t tmask = mask_of(targets);
    const std::uint64_t cmask = mask_of(controls);
    std::vector<Complex>& amps = state.raw();
    Eigen::VectorXcd in(sub);
    Eigen::VectorXcd out(sub);
    for (std::uint64_t base = 0; base < amps.size(); ++base) {
        if ((base & tmask) || (base & cmask) != cmask) continue;
        for (Eigen::Index k = 0; k < sub; ++k) in[k] = amps[base | offsets[static_cast<std::size_t>(k)]];
        out.noalias() = u * in;
        for (Eigen::Index k = 0; k < sub; ++k) amps[base | offsets[static_cast<std::size_t>(k)]] = out[k];
    }
}

Statevector evolve(const Statevector& state, const Propagator& h, double tau, std::span<const int> targets) {
    check_tau(tau);
    if (static_cast<int>(targets.size()) != h.num_qubits()) {
        throw DimensionError(fmt::format("Hamiltonian on {} qubits given {} targets", h.num_qubits(), targets.size()));
    }
    check_qubits(targets, state.num_qubits());
    Statevector out = state;
    if (tau == 0.0) return out;
    apply_matrix_inplace(out, h.unitary(tau), targets);
    return out;
}

Statevector evolve(const Statevector& state, const pauli::PauliSum& h, double tau, std::span<const int> targets) {
    if (static_cast<int>(targets.size()) != h.num_qubits()) {
        throw DimensionError(fmt::format("Hamiltonian on {} qubits given {} targets", h.num_qubits(), targets.size()));
    }
    return evolve(state, Propagator(h), tau, targets);
}

Statevector evolve_controlled(const Statevector& state, const Propagator& h, double tau, int control,
                              std::span<const int> targets) {
    check_tau(tau);
    if (static_cast<int>(targets.size()) != h.num_qubits()) {
        throw DimensionError(fmt::format("Hamiltonian on {} qubits given {} targets", h.num_qubits(), targets.size()));
    }
    std::vector<int> all(targets.begin(), targets.end());
    all.push_back(control);
    check_qubits(all, state.num_qubits());
    Statevector out = state;
    if (tau == 0.0) return out;
    const int controls[] = {control};
    apply_matrix_inplace(out, h.unitary(tau), targets, controls);
    return out;
}

Statevector evolve_controlled(const Statevector& state, const pauli::PauliSum& h, double tau, int control,
                              std::span<const int> targets) {
    if (static_cast<int>(targets.size()) != h.num_qubits()) {
        throw DimensionError(fmt::format("Hamiltonian on {} qubits given {} targets", h.num_qubits(), targets.size()));
    }
    return evolve_controlled(state, Propagator(h), tau, control, targets);
}

}  // namespace demonlab::qstate
