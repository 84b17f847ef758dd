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

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace demonlab::pauli {

inline constexpr int kMaxPauliQubits = 32;

/// An n-qubit Pauli operator i^phase * P_0 (x) P_1 (x) ... (x) P_{n-1}.
///
/// Qubit q carries I, X, Z or Y when (x_bit, z_bit) is (0,0), (1,0), (0,1)
/// or (1,1). Note that Y is stored directly (not as XZ), so the phase is
/// the literal prefactor of the tensor product.
///
/// Text form lists qubit 0 first: "ZZI" is Z_0 Z_1 I_2. An optional prefix
/// "+", "-", "i", "+i" or "-i" sets the phase.
class PauliString {
   public:
    PauliString() = default;
    PauliString(int n, std::uint64_t x_mask, std::uint64_t z_mask, std::uint8_t phase = 0);

    static PauliString identity(int n);
    /// op is one of 'I', 'X', 'Y', 'Z'.
    static PauliString single(int n, int qubit, char op);
    static PauliString from_str(std::string_view text);

    int num_qubits() const { return n_; }
    std::uint64_t x_mask() const { return x_; }
    std::uint64_t z_mask() const { return z_; }
    /// Power of i in 0..3.
    std::uint8_t phase() const { return phase_; }
    std::complex<double> phase_factor() const;

    char op_at(int qubit) const;
    /// Number of qubits acted on nontrivially.
    int weight() const;
    bool is_identity() const { return (x_ | z_) == 0; }

    PauliString phase_free() const { return PauliString(n_, x_, z_, 0); }
    bool commutes(const PauliString& other) const;

    /// "+XYZ" style: sign/phase prefix then one letter per qubit.
    std::string str() const;
    /// Operator letters only, no phase prefix.
    std::string letters() const;

    friend PauliString operator*(const PauliString& a, const PauliString& b);
    friend bool operator==(const PauliString& a, const PauliString& b) = default;
    /// Orders by (n, z, x, phase); used for canonical sorting of sets.
    friend bool operator<(const PauliString& a, const PauliString& b);

   private:
    int n_ = 0;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
    std::uint8_t phase_ = 0;
};

/// [a, b] = kappa * op with op phase-free and kappa != 0.
struct Commutator {
    std::complex<double> kappa;
    PauliString op;
};

/// Phase-free c with [a, b] proportional to c, or nullopt when a and b commute.
std::optional<PauliString> pauli_commutator(const PauliString& a, const PauliString& b);

/// Same as pauli_commutator but keeps the scalar: [a, b] = kappa * c.
std::optional<Commutator> pauli_commutator_scaled(const PauliString& a, const PauliString& b);

}  // namespace demonlab::pauli
