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
#include <span>
#include <vector>

#include "demonlab/qstate/statevector.hpp"

namespace demonlab::protocols {

/// Angles drawn from the ansatz stream of `seed`, uniform on [0, 2pi).
/// Layout: for each layer, for each qubit, (ry, rz).
std::vector<double> ansatz_angles(int n, int layers, std::uint64_t seed);

/// EfficientSU2-style state with linear entanglement: per layer, RY then RZ
/// on every qubit followed by CNOT(0,1) CNOT(1,2) ... CNOT(n-2,n-1), all
/// applied to |0...0>.
qstate::Statevector prepare_ansatz_state(int n, int layers, std::uint64_t seed);
/// Same circuit with explicit angles (2 * n * layers of them).
qstate::Statevector prepare_ansatz_state(int n, int layers, std::span<const double> angles);

}  // namespace demonlab::protocols
