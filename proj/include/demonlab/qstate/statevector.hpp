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

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "demonlab/pauli/pauli_sum.hpp"

namespace demonlab::qstate {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 12;
inline constexpr double kNormTolerance = 1e-10;

/// Dense pure state over n qubits; qubit 0 is the least-significant bit of
/// the amplitude index.
class Statevector {
   public:
    /// |0...0> on n qubits.
    explicit Statevector(int n);

    /// Validates length 2^n and unit norm within kNormTolerance.
    static Statevector from_amplitudes(std::vector<Complex> amps);
    static Statevector basis_state(int n, std::uint64_t index);

    int num_qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const Complex> amplitudes() const { return amps_; }
    Complex amplitude(std::size_t index) const { return amps_[index]; }
    double norm() const;

    /// This state on the low qubits, `high` on the qubits above it.
    Statevector tensor(const Statevector& high) const;

    /// {"n": n, "amps": [[re, im], ...]} in index order.
    std::string debug_json() const;

    /// Mutable view for the in-place kernels below. States handed to callers
    /// are always fresh copies.
    std::vector<Complex>& raw() { return amps_; }

   private:
    Statevector(int n, std::vector<Complex> amps) : n_(n), amps_(std::move(amps)) {}

    int n_;
    std::vector<Complex> amps_;
};

enum class GateKind { kH, kRX, kRY, kRZ, kCNOT, kCRX, kCRY };

struct Gate {
    GateKind kind;
    double angle = 0.0;
};

/// Applies `gate` to each qubit in `targets`, conditioned on every qubit in
/// `controls` being |1> and every qubit in `anti_controls` being |0>.
/// CNOT, CRX and CRY need at least one control; H and the plain rotations
/// accept controls as well. RX(t) = exp(-i t X / 2), likewise RY, RZ.
Statevector apply_gate(const Statevector& state, Gate gate, std::span<const int> targets,
                       std::span<const int> controls = {}, std::span<const int> anti_controls = {});

/// Cached spectral decomposition H = V diag(E) V^dagger of a PauliSum, used
/// to form exp(-i H tau) exactly for any tau.
class Propagator {
   public:
    explicit Propagator(const pauli::PauliSum& h);

    int num_qubits() const { return n_; }
    const Eigen::VectorXd& energies() const { return energies_; }
    Eigen::MatrixXcd unitary(double tau) const;

   private:
    int n_;
    Eigen::VectorXd energies_;
    Eigen::MatrixXcd vectors_;
};

/// exp(-i H tau) with H's qubit j acting on targets[j].
Statevector evolve(const Statevector& state, const pauli::PauliSum& h, double tau,
                   std::span<const int> targets);
Statevector evolve(const Statevector& state, const Propagator& h, double tau,
                   std::span<const int> targets);

/// |0><0|_c (x) I + |1><1|_c (x) exp(-i H tau) on targets.
Statevector evolve_controlled(const Statevector& state, const pauli::PauliSum& h, double tau,
                              int control, std::span<const int> targets);
Statevector evolve_controlled(const Statevector& state, const Propagator& h, double tau,
                              int control, std::span<const int> targets);

/// Dense unitary on `targets` (qubit j of the matrix -> targets[j]), in place.
void apply_matrix_inplace(Statevector& state, const Eigen::MatrixXcd& u,
                          std::span<const int> targets, std::span<const int> controls = {});

}  // namespace demonlab::qstate
