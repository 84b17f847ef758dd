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

#include <span>
#include <vector>

namespace demonlab::qstate {

/// Throws InvalidArgument unless every index is in [0, n) and no index repeats.
void check_qubits(std::span<const int> qubits, int n);

/// Names the system (S), ancilla (A) and parameter (P) registers of a joint state.
struct RegisterLayout {
    std::vector<int> system;
    std::vector<int> ancillae;
    std::vector<int> parameters;

    int num_qubits() const;
    /// Lists are disjoint and together cover 0..num_qubits()-1.
    void validate() const;
    /// System block first, then ancillae, then parameters, each contiguous.
    static RegisterLayout contiguous(int n_system, int n_ancillae, int n_parameters = 0);
};

/// Two disjoint, nonempty sides that together cover all n qubits.
void check_bipartition(std::span<const int> a, std::span<const int> b, int n);

std::vector<int> qubit_range(int first, int count);

}  // namespace demonlab::qstate
