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

#include "demonlab/pauli/pauli_sum.hpp"

#include <fmt/format.h>

#include <unordered_map>

#include "demonlab/common/error.hpp"

namespace demonlab::pauli {

PauliSum::PauliSum(int n, const std::vector<PauliTerm>& terms) : n_(n) {
    std::unordered_map<std::uint64_t, std::size_t> slot;  // (x, z) packed -> index
    std::vector<PauliTerm> merged;
    for (const PauliTerm& term : terms) {
        if (term.op.num_qubits() != n) {
            throw DimensionError(fmt::format("term {} has {} qubits, sum has {}", term.op.str(),
                                             term.op.num_qubits(), n));
        }
        double sign = 1.0;
        switch (term.op.phase()) {
            case 0: break;
            case 2: sign = -1.0; break;
            default:
                throw InvalidArgument("imaginary phase on term " + term.op.str() +
                                      " makes the sum non-Hermitian");
        }
        const PauliString op = term.op.phase_free();
        const std::uint64_t key = op.x_mask() | (op.z_mask() << 32);
        auto [it, inserted] = slot.try_emplace(key, merged.size());
        if (inserted) {
            merged.push_back({sign * term.coefficient, op});
        } else {
            merged[it->second].coefficient += sign * term.coefficient;
        }
    }
    for (const PauliTerm& term : merged) {
        if (term.coefficient != 0.0) terms_.push_back(term);
    }
}

PauliSum PauliSum::embedded(int wider_n) const {
    if (wider_n < n_) {
        throw DimensionError(fmt::format("cannot embed {} qubits into {}", n_, wider_n));
    }
    std::vector<PauliTerm> out;
    out.reserve(terms_.size());
    for (const PauliTerm& t : terms_) {
        out.push_back({t.coefficient, PauliString(wider_n, t.op.x_mask(), t.op.z_mask())});
    }
    return PauliSum(wider_n, out);
}

PauliSum PauliSum::filtered_by_weight(int min_weight, int max_weight) const {
    std::vector<PauliTerm> out;
    for (const PauliTerm& t : terms_) {
        const int w = t.op.weight();
        if (w >= min_weight && w <= max_weight) out.push_back(t);
    }
    return PauliSum(n_, out);
}

std::string PauliSum::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (k) out += " + ";
        out += fmt::format("{:.17g}*{}", terms_[k].coefficient, terms_[k].op.letters());
    }
    return out;
}

}  // namespace demonlab::pauli
