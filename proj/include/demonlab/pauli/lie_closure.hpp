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

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <json.hpp>

#include "demonlab/pauli/pauli_string.hpp"
#include "demonlab/pauli/pauli_sum.hpp"

namespace demonlab::pauli {

// ---------------------------------------------------------------------------
// Set closure over single Pauli strings.
// ---------------------------------------------------------------------------

/// Phase-free Pauli strings closed under commutation (up to scalars).
struct LieBasis {
    int n = 0;
    std::vector<PauliString> elements;  // sorted
    bool truncated = false;

    std::size_t dim() const { return elements.size(); }
};

/// Smallest set of phase-free strings containing `generators` and closed
/// under [a, b] ~ c. Worklist: each newly inserted element is commuted with
/// every element already present until nothing new appears. Identity
/// generators are central and dropped. `cap == 0` means 4^n - 1. When an
/// insertion would push the set past `cap` the loop stops and the basis is
/// marked truncated.
LieBasis lie_closure(std::span<const PauliString> generators, std::size_t cap = 0);

/// Term-split generating set: every Pauli term of H as its own generator,
/// followed by the ansatz rotation generators Y_0..Y_{n-1}, Z_0..Z_{n-1}.
/// Duplicates are removed, first occurrence kept.
std::vector<PauliString> dla_generating_set(const PauliSum& h, int n);

struct WeightHistogram {
    std::map<int, std::size_t> counts;  // Pauli weight -> number of basis elements
    double mean_weight = 0.0;

    std::size_t total() const;
};

WeightHistogram pauli_weight_histogram(const LieBasis& basis);

/// {"n", "dim", "truncated", "weights": {"w": count}}
nlohmann::ordered_json to_json(const LieBasis& basis);

// ---------------------------------------------------------------------------
// Span closure over real linear combinations of Pauli strings.
// ---------------------------------------------------------------------------

inline constexpr int kMaxSpanQubits = 7;

/// Coordinate of a phase-free string in the dense 4^n Pauli basis: x | z << n.
std::size_t pauli_index(const PauliString& p);
PauliString pauli_from_index(int n, std::size_t index);

/// Orthonormal basis (Hilbert-Schmidt, Pauli coordinates) of the real Lie
/// algebra spanned by nested brackets i[A, B] of Hermitian generators.
struct AlgebraBasis {
    int n = 0;
    std::vector<std::vector<double>> elements;  // each of length 4^n
    bool truncated = false;

    std::size_t dim() const { return elements.size(); }
};

/// Span closure. Only brackets with generators are formed: the left-normed
/// brackets [g1, [g2, [..., gk]]] already span the generated algebra, which
/// keeps the cost at dim * |generators| brackets. Candidates are projected
/// off the current basis (two Gram-Schmidt passes) and kept when the
/// residual exceeds `tolerance` relative to the candidate norm.
AlgebraBasis lie_closure_span(std::span<const PauliSum> generators, std::size_t cap = 0,
                              double tolerance = 1e-9);

/// Generating set for the phase-comparison study: the coupling part of H
/// (all terms of weight >= 2) as one element, and the uniform transverse
/// mixer sum_i X_i. Fields of H are not included; see README.
std::vector<PauliSum> dla_sum_generators(const PauliSum& h);

/// Weight profile of a span basis: mass[w] = sum over strings P of weight w
/// of <P|Proj|P>, where Proj projects onto the algebra. Basis independent,
/// sums to dim, and reduces to integer counts when the basis is made of
/// single Pauli strings.
struct WeightProfile {
    std::map<int, double> mass;
    double mean_weight = 0.0;

    double total() const;
};

WeightProfile algebra_weight_profile(const AlgebraBasis& basis);

nlohmann::ordered_json to_json(const AlgebraBasis& basis);

}  // namespace demonlab::pauli
