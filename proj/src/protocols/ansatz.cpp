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

#include "demonlab/protocols/ansatz.hpp"

#include <fmt/format.h>

#include <numbers>

#include "demonlab/common/error.hpp"
#include "demonlab/common/rng.hpp"

namespace demonlab::protocols {

using qstate::Gate;
using qstate::GateKind;
using qstate::Statevector;

namespace {

void check_shape(int n, int layers) {
    if (n < 2) throw InvalidArgument(fmt::format("ansatz needs at least 2 qubits, got {}", n));
    if (layers < 1) throw InvalidArgument(fmt::format("ansatz needs at least 1 layer, got {}", layers));
}

}  // namespace

std::vector<double> ansatz_angles(int n, int layers, std::uint64_t seed) {
    check_shape(n, layers);
    Rng rng(seed, Stream::kAnsatz);
    std::vector<double> angles(static_cast<std::size_t>(2 * n * layers));
    for (double& a : angles) a = rng.uniform(0.0, 2.0 * std::numbers::pi);
    return angles;
}

Statevector prepare_ansatz_state(int n, int layers, std::uint64_t seed) {
    const std::vector<double> angles = ansatz_angles(n, layers, seed);
    return prepare_ansatz_state(n, layers, angles);
}

Statevector prepare_ansatz_state(int n, int layers, std::span<const double> angles) {
    check_shape(n, layers);
    if (angles.size() != static_cast<std::size_t>(2 * n * layers)) {
        throw DimensionError(fmt::format("ansatz expects {} angles, got {}", 2 * n * layers, angles.size()));
    }
    Statevector psi(n);
    std::size_t k = 0;
    for (int layer = 0; layer < layers; ++layer) {
        for (int q = 0; q < n; ++q) {
            const int target[] = {q};
            psi = qstate::apply_gate(psi, Gate{GateKind::kRY, angles[k++]}, target);
            psi = qstate::apply_gate(psi, Gate{GateKind::kRZ, angles[k++]}, target);
        }
        for (int q = 0; q + 1 < n; ++q) {
            const int control[] = {q};
            const int target[] = {q + 1};
            psi = qstate::apply_gate(psi, Gate{GateKind::kCNOT}, target, control);
        }
    }
    return psi;
}

}  // namespace demonlab::protocols
