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

#include "demonlab/pauli/hamiltonians.hpp"

#include <vector>

#include "demonlab/common/error.hpp"
#include "demonlab/common/rng.hpp"

namespace demonlab::pauli {

namespace {

void check_size(int n) {
    if (n < 2) throw InvalidArgument("Hamiltonian needs at least 2 qubits, got " + std::to_string(n));
    if (n > kMaxPauliQubits) throw InvalidArgument("too many qubits: " + std::to_string(n));
}

PauliString zz(int n, int i, int j) {
    return PauliString(n, 0, (1ULL << i) | (1ULL << j));
}

}  // namespace

std::string_view to_string(Phase phase) {
    return phase == Phase::kOrdered ? "ordered" : "chaotic";
}

std::optional<Phase> parse_phase(std::string_view text) {
    if (text == "ordered" || text == "complete" || text == "ferromagnet") return Phase::kOrdered;
    if (text == "chaotic" || text == "sk" || text == "spin-glass") return Phase::kChaotic;
    return std::nullopt;
}

PauliSum build_complete_graph_hamiltonian(int n, double coupling, std::uint64_t seed,
                                          FieldMode fields) {
    check_size(n);
    std::vector<PauliTerm> terms;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) terms.push_back({-coupling, zz(n, i, j)});
    }
    if (fields == FieldMode::kRandom) {
        Rng rng(seed, Stream::kHamiltonian);
        for (int i = 0; i < n; ++i) {
            terms.push_back({rng.uniform(-1.0, 1.0), PauliString::single(n, i, 'X')});
        }
    }
    return PauliSum(n, terms);
}

PauliSum build_sk_hamiltonian(int n, std::uint64_t seed, double scale) {
    check_size(n);
    Rng rng(seed, Stream::kHamiltonian);
    std::vector<PauliTerm> terms;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) terms.push_back({rng.uniform(-scale, scale), zz(n, i, j)});
    }
    for (int i = 0; i < n; ++i) {
        terms.push_back({rng.uniform(-1.0, 1.0), PauliString::single(n, i, 'X')});
    }
    return PauliSum(n, terms);
}

PauliSum build_phase_hamiltonian(Phase phase, int n, std::uint64_t seed, double coupling) {
    return phase == Phase::kOrdered ? build_complete_graph_hamiltonian(n, coupling, seed)
                                    : build_sk_hamiltonian(n, seed, coupling);
}

}  // namespace demonlab::pauli
