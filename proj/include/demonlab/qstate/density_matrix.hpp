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
#include <string>

#include <Eigen/Dense>

#include "demonlab/pauli/pauli_sum.hpp"
#include "demonlab/qstate/statevector.hpp"

namespace demonlab::qstate {

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kPsdTolerance = 1e-9;
/// Eigenvalues below this contribute nothing to an entropy.
inline constexpr double kEntropyClamp = 1e-12;

/// Hermitian, unit-trace, positive semidefinite matrix over n qubits.
class DensityMatrix {
   public:
    /// Checks hermiticity, trace and PSD against the tolerances above.
    static DensityMatrix from_matrix(Eigen::MatrixXcd m);
    static DensityMatrix from_pure(const Statevector& psi);
    /// Identity / 2^n.
    static DensityMatrix maximally_mixed(int n);

    int num_qubits() const { return n_; }
    Eigen::Index dim() const { return m_.rows(); }
    const Eigen::MatrixXcd& matrix() const { return m_; }
    double purity() const;

    /// {"n": n, "rows": [[[re, im], ...], ...]} row-major.
    std::string debug_json() const;

   private:
    DensityMatrix(int n, Eigen::MatrixXcd m) : n_(n), m_(std::move(m)) {}
    friend DensityMatrix trusted_density(int n, Eigen::MatrixXcd m);

    int n_;
    Eigen::MatrixXcd m_;
};

/// Builds a DensityMatrix from an algebraically valid matrix (partial traces,
/// mixtures of valid states) without the eigenvalue check.
DensityMatrix trusted_density(int n, Eigen::MatrixXcd m);

/// Reduced state on `keep`; keep[j] becomes qubit j of the result.
DensityMatrix partial_trace(const Statevector& state, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// -sum lambda log2 lambda over eigenvalues above kEntropyClamp, in bits.
double von_neumann_entropy(const DensityMatrix& rho);

/// I(A:B) = S(A) + S(B) - S(AB) in bits; a and b must cover the register.
double mutual_information(const Statevector& joint, std::span<const int> a, std::span<const int> b);
double mutual_information(const DensityMatrix& joint, std::span<const int> a, std::span<const int> b);

/// E_N = log2 || rho^{T_a} ||_1, trace norm of the partial transpose on side a.
double log_negativity(const DensityMatrix& joint, std::span<const int> a, std::span<const int> b);
/// Pure-state route through the Schmidt coefficients: E_N = 2 log2 sum_i sqrt(lambda_i).
double log_negativity(const Statevector& joint, std::span<const int> a, std::span<const int> b);

/// Re <psi|H|psi>; H must act on the full register.
double expectation(const Statevector& state, const pauli::PauliSum& h);
/// Re Tr(rho H).
double expectation(const DensityMatrix& rho, const pauli::PauliSum& h);

}  // namespace demonlab::qstate
