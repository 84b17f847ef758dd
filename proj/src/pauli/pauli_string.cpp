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

#include "demonlab/pauli/pauli_string.hpp"

#include <bit>
#include <tuple>

#include "demonlab/common/error.hpp"

namespace demonlab::pauli {

namespace {

std::uint64_t qubit_mask(int n) {
    return n == 64 ? ~0ULL : ((1ULL << n) - 1);
}

void check_same_size(const PauliString& a, const PauliString& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("Pauli strings act on different qubit counts: " +
                             std::to_string(a.num_qubits()) + " vs " +
                             std::to_string(b.num_qubits()));
    }
}

// Exponent g with sigma(x1,z1) * sigma(x2,z2) = i^g sigma(x1^x2, z1^z2).
int product_exponent(bool x1, bool z1, bool x2, bool z2) {
    if (!x1 && !z1) return 0;
    if (x1 && z1) return static_cast<int>(z2) - static_cast<int>(x2);
    if (x1) return static_cast<int>(z2) * (2 * static_cast<int>(x2) - 1);
    return static_cast<int>(x2) * (1 - 2 * static_cast<int>(z2));
}

}  // namespace

PauliString::PauliString(int n, std::uint64_t x_mask, std::uint64_t z_mask, std::uint8_t phase)
    : n_(n), x_(x_mask), z_(z_mask), phase_(phase & 3) {
    if (n < 0 || n > kMaxPauliQubits) {
        throw DimensionError("Pauli string qubit count out of range: " + std::to_string(n));
    }
    if (((x_ | z_) & ~qubit_mask(n)) != 0) {
        throw InvalidArgument("Pauli mask has bits beyond qubit count " + std::to_string(n));
    }
}

PauliString PauliString::identity(int n) {
    return PauliString(n, 0, 0, 0);
}

PauliString PauliString::single(int n, int qubit, char op) {
    if (qubit < 0 || qubit >= n) {
        throw InvalidArgument("qubit index " + std::to_string(qubit) + " out of range");
    }
    const std::uint64_t bit = 1ULL << qubit;
    switch (op) {
        case 'I': return PauliString(n, 0, 0);
        case 'X': return PauliString(n, bit, 0);
        case 'Y': return PauliString(n, bit, bit);
        case 'Z': return PauliString(n, 0, bit);
        default: throw InvalidArgument(std::string("unknown Pauli letter '") + op + "'");
    }
}

PauliString PauliString::from_str(std::string_view text) {
    std::uint8_t phase = 0;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        if (text.front() == '-') phase = 2;
        text.remove_prefix(1);
    }
    if (!text.empty() && text.front() == 'i') {
        phase = (phase + 1) & 3;
        text.remove_prefix(1);
    }
    const int n = static_cast<int>(text.size());
    if (n == 0) throw InvalidArgument("Pauli string has no qubits");
    if (n > kMaxPauliQubits) {
        throw DimensionError("Pauli string too long: " + std::to_string(n));
    }
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (int q = 0; q < n; ++q) {
        const std::uint64_t bit = 1ULL << q;
        switch (text[q]) {
            case 'I':
            case '_': break;
            case 'X': x |= bit; break;
            case 'Y': x |= bit; z |= bit; break;
            case 'Z': z |= bit; break;
            default:
                throw InvalidArgument("unknown Pauli letter '" + std::string(1, text[q]) + "'");
        }
    }
    return PauliString(n, x, z, phase);
}

std::complex<double> PauliString::phase_factor() const {
    switch (phase_) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

char PauliString::op_at(int qubit) const {
    const bool x = (x_ >> qubit) & 1;
    const bool z = (z_ >> qubit) & 1;
    return "IXZY"[x + 2 * z];
}

int PauliString::weight() const {
    return std::popcount(x_ | z_);
}

bool PauliString::commutes(const PauliString& other) const {
    check_same_size(*this, other);
    return (std::popcount((x_ & other.z_) ^ (z_ & other.x_)) & 1) == 0;
}

std::string PauliString::letters() const {
    std::string out;
    out.reserve(n_);
    for (int q = 0; q < n_; ++q) out.push_back(op_at(q));
    return out;
}

std::string PauliString::str() const {
    static constexpr const char* kPrefix[] = {"+", "+i", "-", "-i"};
    return kPrefix[phase_] + letters();
}

PauliString operator*(const PauliString& a, const PauliString& b) {
    check_same_size(a, b);
    int exponent = a.phase_ + b.phase_;
    const std::uint64_t active = (a.x_ | a.z_) & (b.x_ | b.z_);
    for (std::uint64_t m = active; m != 0; m &= m - 1) {
        const int q = std::countr_zero(m);
        exponent += product_exponent((a.x_ >> q) & 1, (a.z_ >> q) & 1, (b.x_ >> q) & 1,
                                     (b.z_ >> q) & 1);
    }
    return PauliString(a.n_, a.x_ ^ b.x_, a.z_ ^ b.z_,
                       static_cast<std::uint8_t>(((exponent % 4) + 4) % 4));
}

bool operator<(const PauliString& a, const PauliString& b) {
    return std::tie(a.n_, a.z_, a.x_, a.phase_) < std::tie(b.n_, b.z_, b.x_, b.phase_);
}

std::optional<PauliString> pauli_commutator(const PauliString& a, const PauliString& b) {
    if (a.commutes(b)) return std::nullopt;
    return (a * b).phase_free();
}

std::optional<Commutator> pauli_commutator_scaled(const PauliString& a, const PauliString& b) {
    if (a.commutes(b)) return std::nullopt;
    // Anticommuting: ab - ba = 2ab.
    const PauliString product = a * b;
    return Commutator{2.0 * product.phase_factor(), product.phase_free()};
}

}  // namespace demonlab::pauli
