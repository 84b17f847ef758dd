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

#include "demonlab/protocols/interference.hpp"

#include <fmt/format.h>

#include "demonlab/common/error.hpp"
#include "demonlab/qstate/density_matrix.hpp"

namespace demonlab::protocols {

using pauli::PauliString;
using pauli::PauliSum;
using qstate::Gate;
using qstate::GateKind;
using qstate::Statevector;

namespace {

constexpr double kEncodeAngle = std::numbers::pi;

void encode(Statevector& psi, std::span<const int> params, std::span<const int> system, double angle) {
    for (std::size_t i = 0; i < params.size(); ++i) {
        const int control[] = {params[i]};
        const int target[] = {system[i]};
        psi = qstate::apply_gate(psi, Gate{GateKind::kCRY, angle}, target, control);
    }
}

}  // namespace

std::string_view to_string(Interaction interaction) {
    return interaction == Interaction::kSeparable ? "separable" : "interacting";
}

double nonlinearity_test(Interaction interaction, double t) {
    if (!(t >= 0.0)) throw InvalidArgument(fmt::format("evolution time must be >= 0, got {}", t));
    const PauliSum h = interaction == Interaction::kSeparable
                           ? PauliSum(2, {{1.0, PauliString::from_str("ZI")}, {1.0, PauliString::from_str("IZ")}})
                           : PauliSum(2, {{1.0, PauliString::from_str("ZZ")}});
    const int params[] = {0, 1};
    const int system[] = {2, 3};

    Statevector psi(4);
    psi = qstate::apply_gate(psi, Gate{GateKind::kH}, params);
    encode(psi, params, system, kEncodeAngle);
    psi = qstate::evolve(psi, h, t, system);
    encode(psi, params, system, -kEncodeAngle);

    const qstate::DensityMatrix rho_params = qstate::partial_trace(psi, params);
    const int p0[] = {0};
    const int p1[] = {1};
    return qstate::mutual_information(rho_params, p0, p1);
}

qstate::RegisterLayout w_gate_layout(int n_params) {
    return {qstate::qubit_range(n_params, n_params), {2 * n_params}, qstate::qubit_range(0, n_params)};
}

Statevector w_gate_sandwich(int n_params, const PauliSum& h, double tau, double mixer_angle, AncillaInit ancilla) {
    if (n_params < 1) throw InvalidArgument("W-gate needs at least one parameter qubit");
    if (h.num_qubits() != n_params) {
        throw DimensionError(fmt::format("Hamiltonian acts on {} system qubits, but there are {} parameter qubits",
                                         h.num_qubits(), n_params));
    }
    if (2 * n_params + 1 > qstate::kMaxQubits) {
        throw DimensionError(fmt::format("W-gate register of {} qubits exceeds the dense limit", 2 * n_params + 1));
    }
    const qstate::RegisterLayout layout = w_gate_layout(n_params);
    const int anc[] = {layout.ancillae.front()};

    Statevector psi(2 * n_params + 1);
    psi = qstate::apply_gate(psi, Gate{GateKind::kH}, layout.parameters);
    switch (ancilla) {
        case AncillaInit::kZero: break;
        case AncillaInit::kOne: psi = qstate::apply_gate(psi, Gate{GateKind::kRY, std::numbers::pi}, anc); break;
        case AncillaInit::kPlus: psi = qstate::apply_gate(psi, Gate{GateKind::kH}, anc); break;
    }
    encode(psi, layout.parameters, layout.system, kEncodeAngle);
    psi = qstate::evolve_controlled(psi, h, tau, anc[0], layout.system);
    psi = qstate::apply_gate(psi, Gate{GateKind::kRY, mixer_angle}, layout.parameters, {}, anc);
    encode(psi, layout.parameters, layout.system, -kEncodeAngle);
    return psi;
}

}  // namespace demonlab::protocols
