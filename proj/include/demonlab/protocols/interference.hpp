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

#include <numbers>
#include <optional>
#include <string_view>

#include "demonlab/pauli/pauli_sum.hpp"
#include "demonlab/qstate/register_layout.hpp"
#include "demonlab/qstate/statevector.hpp"

namespace demonlab::protocols {

enum class Interaction {
    kSeparable,    // H = Z_0 + Z_1
    kInteracting,  // H = Z_0 Z_1
};

std::string_view to_string(Interaction interaction);

/// Four-qubit parameter-interference probe on (P0, P1, S0, S1) = qubits 0..3:
/// H on P0, P1; CRY(pi) from P_i onto S_i; exp(-i H t) on the system;
/// CRY(-pi) to undo the encoding. Returns I(P0 : P1) in bits.
double nonlinearity_test(Interaction interaction, double t);

enum class AncillaInit { kZero, kOne, kPlus };

/// Qubit roles of the W-gate register: parameters 0..p-1, system p..2p-1,
/// ancilla 2p.
qstate::RegisterLayout w_gate_layout(int n_params);

/// Parameter-register interference sandwich W^dagger U W on
/// n_params parameter qubits, n_params system qubits and one ancilla:
///   1. H on every parameter qubit; the ancilla is prepared as `ancilla`.
///   2. CRY(pi) from parameter i onto system qubit i.
///   3. exp(-i H tau) on the system, only on the ancilla |1> branch (drift).
///   4. RY(mixer_angle) on every parameter qubit, only on the ancilla |0>
///      branch (mixer).
///   5. CRY(-pi) from parameter i onto system qubit i.
/// Returns the full register state.
qstate::Statevector w_gate_sandwich(int n_params, const pauli::PauliSum& h, double tau,
                                    double mixer_angle = std::numbers::pi / 2,
                                    AncillaInit ancilla = AncillaInit::kPlus);

}  // namespace demonlab::protocols
