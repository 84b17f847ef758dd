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
#include <optional>
#include <string_view>

#include "demonlab/pauli/pauli_sum.hpp"

namespace demonlab::pauli {

/// Ordered = uniform ferromagnet on the complete graph; chaotic = SK spin glass.
enum class Phase { kOrdered, kChaotic };

std::string_view to_string(Phase phase);
std::optional<Phase> parse_phase(std::string_view text);

enum class FieldMode {
    kRandom,  // h_i ~ U[-1, 1]
    kZero,    // no transverse-field terms
};

/// H = -J sum_{i<j} Z_i Z_j + sum_i h_i X_i on the complete graph K_N.
///
/// Draw order from the Hamiltonian stream of `seed`: h_0, ..., h_{N-1}.
/// Term order: all ZZ pairs (i<j lexicographic), then X_0 .. X_{N-1}.
PauliSum build_complete_graph_hamiltonian(int n, double coupling, std::uint64_t seed,
                                          FieldMode fields = FieldMode::kRandom);

/// H = sum_{i<j} J_ij Z_i Z_j + sum_i h_i X_i with J_ij ~ U[-scale, scale] and
/// h_i ~ U[-1, 1].
///
/// Draw order: every J_ij (i<j lexicographic) first, then h_0 .. h_{N-1}.
PauliSum build_sk_hamiltonian(int n, std::uint64_t seed, double scale = 1.0);

/// Dispatches on phase; `coupling` is J for ordered and the J_ij range for chaotic.
PauliSum build_phase_hamiltonian(Phase phase, int n, std::uint64_t seed, double coupling = 1.0);

}  // namespace demonlab::pauli
