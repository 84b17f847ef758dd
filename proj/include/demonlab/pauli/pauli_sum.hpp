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

#include <string>
#include <vector>

#include "demonlab/pauli/pauli_string.hpp"

namespace demonlab::pauli {

struct PauliTerm {
    double coefficient = 0.0;
    PauliString op;  // phase-free
};

/// A Hermitian operator sum_k c_k P_k with real c_k and phase-free P_k.
///
/// Construction canonicalizes: a +/-1 phase on an input string is folded
/// into its coefficient, repeated operators are merged (keeping the position
/// of the first occurrence) and terms whose merged coefficient is exactly
/// zero are dropped. Imaginary phases are rejected since the sum would not
/// be Hermitian.
class PauliSum {
   public:
    explicit PauliSum(int n) : n_(n) {}
    PauliSum(int n, const std::vector<PauliTerm>& terms);

    int num_qubits() const { return n_; }
    const std::vector<PauliTerm>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// Same operator on a wider register; qubit indices are unchanged.
    PauliSum embedded(int wider_n) const;

    /// Terms acting on at least `min_weight` qubits.
    PauliSum filtered_by_weight(int min_weight, int max_weight) const;

    /// One "coef*LETTERS" entry per term joined by " + ".
    std::string str() const;

   private:
    int n_;
    std::vector<PauliTerm> terms_;
};

}  // namespace demonlab::pauli
