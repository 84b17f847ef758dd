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

#include "demonlab/qstate/register_layout.hpp"

#include <fmt/format.h>

#include <cstdint>
#include <numeric>

#include "demonlab/common/error.hpp"

namespace demonlab::qstate {

void check_qubits(std::span<const int> qubits, int n) {
    std::uint64_t seen = 0;
    for (int q : qubits) {
        if (q < 0 || q >= n) {
            throw InvalidArgument(fmt::format("qubit index {} out of range for {} qubits", q, n));
        }
        if (seen & (1ULL << q)) throw InvalidArgument(fmt::format("qubit {} used twice", q));
        seen |= 1ULL << q;
    }
}

int RegisterLayout::num_qubits() const {
    return static_cast<int>(system.size() + ancillae.size() + parameters.size());
}

void RegisterLayout::validate() const {
    std::vector<int> all = system;
    all.insert(all.end(), ancillae.begin(), ancillae.end());
    all.insert(all.end(), parameters.begin(), parameters.end());
    // Disjoint and all in range => covers 0..n-1 exactly.
    check_qubits(all, num_qubits());
}

RegisterLayout RegisterLayout::contiguous(int n_system, int n_ancillae, int n_parameters) {
    return {qubit_range(0, n_system), qubit_range(n_system, n_ancillae),
            qubit_range(n_system + n_ancillae, n_parameters)};
}

void check_bipartition(std::span<const int> a, std::span<const int> b, int n) {
    if (a.empty() || b.empty()) throw InvalidArgument("bipartition sides must be nonempty");
    if (static_cast<int>(a.size() + b.size()) != n) {
        throw InvalidArgument(fmt::format("bipartition covers {} of {} qubits", a.size() + b.size(), n));
    }
    std::vector<int> all(a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    check_qubits(all, n);
}

std::vector<int> qubit_range(int first, int count) {
    std::vector<int> out(static_cast<std::size_t>(count));
    std::iota(out.begin(), out.end(), first);
    return out;
}

}  // namespace demonlab::qstate
