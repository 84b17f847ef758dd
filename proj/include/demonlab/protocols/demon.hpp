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

#include <cstdint>
#include <string>
#include <vector>

#include "demonlab/pauli/pauli_sum.hpp"
#include "demonlab/qstate/density_matrix.hpp"
#include "demonlab/qstate/statevector.hpp"

namespace demonlab::protocols {

inline constexpr int kMinSystemQubits = 2;
inline constexpr int kMaxSystemQubits = 8;

struct DemonConfig {
    int n_system = 4;
    pauli::PauliSum hamiltonian{4};
    double theta_gain = 0.2;  // radians, in [0, pi]
    int k_ancillae = 1;
    int ansatz_layers = 1;
    std::uint64_t seed = 0;
    /// System qubit receiving the controlled-RX kick.
    int feedback_qubit = 0;

    void validate() const;
};

/// One sensing-correlation-feedback cycle. Information quantities are taken
/// after the last ancilla's correlation Hadamard and before its kick.
struct DemonStepRecord {
    double tau = 0.0;
    double mutual_info = 0.0;      // I(S : A_1..A_k), bits
    double ancilla_entropy = 0.0;  // S(A_1..A_k), bits
    double log_neg = 0.0;          // E_N across S | A
    double work = 0.0;             // energy_before - energy_after
    double energy_before = 0.0;    // <H> after sensing, before the first kick
    double energy_after = 0.0;     // <H> after the last kick
    int k = 1;
};

struct DemonStepResult {
    /// Reduced system state once every ancilla is traced out.
    qstate::DensityMatrix system;
    DemonStepRecord record;
};

/// Runs the coherent demon for a fixed configuration. The Hamiltonian's
/// spectral decomposition is computed once, so one instance can serve a
/// whole sensing-time sweep.
///
/// Register: system qubits 0..N-1, ancilla j at qubit N+j. For each ancilla
/// in turn: H (|+>), exp(-i H_S tau) controlled on the ancilla, H again,
/// then CRX(theta_gain) from the ancilla onto the feedback qubit.
class CoherentDemon {
   public:
    explicit CoherentDemon(DemonConfig config);

    const DemonConfig& config() const { return config_; }

    DemonStepResult step(const qstate::Statevector& system, double tau) const;
    /// Mixed input: the cycle is run on each eigenvector of rho and the
    /// results recombined, which is exact because every phase is unitary.
    DemonStepResult step(const qstate::DensityMatrix& system, double tau) const;

   private:
    struct Component {
        double weight;
        qstate::Statevector joint;
    };
    DemonStepResult run(std::vector<Component> ensemble, double joint_entropy, double tau) const;

    DemonConfig config_;
    qstate::Propagator propagator_;
    pauli::PauliSum joint_hamiltonian_;
};

DemonStepResult demon_step(const qstate::Statevector& system, const DemonConfig& config, double tau);
DemonStepResult demon_step(const qstate::DensityMatrix& system, const DemonConfig& config, double tau);

std::string demon_csv_header();
std::string demon_csv_row(const DemonStepRecord& record);

}  // namespace demonlab::protocols
