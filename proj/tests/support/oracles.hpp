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

// Reference implementations for tests. Everything here is built from
// Kronecker products of 2x2 matrices and textbook formulas, never from the
// library's own kernels.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "demonlab/pauli/pauli_sum.hpp"
#include "demonlab/qstate/statevector.hpp"

namespace oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat pauli1(char op) {
    Mat m = Mat::Zero(2, 2);
    switch (op) {
        case 'I': m << 1, 0, 0, 1; break;
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, C(0, -1), C(0, 1), 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: throw std::invalid_argument("bad Pauli letter");
    }
    return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// per_qubit[q] acts on qubit q; qubit 0 is the least-significant index bit,
/// so the matrix is M_{n-1} (x) ... (x) M_0.
inline Mat kron_chain(const std::vector<Mat>& per_qubit) {
    Mat out = Mat::Identity(1, 1);
    for (const Mat& m : per_qubit) out = kron(m, out);
    return out;
}

/// letters[q] is the operator on qubit q.
inline Mat pauli_matrix(const std::string& letters) {
    std::vector<Mat> ops;
    for (char c : letters) ops.push_back(pauli1(c == '_' ? 'I' : c));
    return kron_chain(ops);
}

inline Mat pauli_matrix(const demonlab::pauli::PauliString& p) {
    return p.phase_factor() * pauli_matrix(p.letters());
}

inline Mat sum_matrix(const demonlab::pauli::PauliSum& h) {
    const Eigen::Index d = Eigen::Index{1} << h.num_qubits();
    Mat out = Mat::Zero(d, d);
    for (const auto& t : h.terms()) out += t.coefficient * pauli_matrix(t.op);
    return out;
}

inline Mat embed(const Mat& single, int qubit, int n) {
    std::vector<Mat> ops(static_cast<std::size_t>(n), Mat::Identity(2, 2));
    ops[static_cast<std::size_t>(qubit)] = single;
    return kron_chain(ops);
}

inline Mat hadamard() {
    Mat h(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    h << s, s, s, -s;
    return h;
}

inline Mat rot(char axis, double theta) {
    return std::cos(theta / 2) * Mat::Identity(2, 2) - C(0, 1) * std::sin(theta / 2) * pauli1(axis);
}

inline Mat projector(int bit) {
    Mat p = Mat::Zero(2, 2);
    p(bit, bit) = 1;
    return p;
}

/// |0><0|_c (x) I + |1><1|_c (x) U_t on n qubits.
inline Mat controlled(const Mat& u, int control, int target, int n) {
    std::vector<Mat> off(static_cast<std::size_t>(n), Mat::Identity(2, 2));
    std::vector<Mat> on = off;
    off[static_cast<std::size_t>(control)] = projector(0);
    on[static_cast<std::size_t>(control)] = projector(1);
    on[static_cast<std::size_t>(target)] = u;
    return kron_chain(off) + kron_chain(on);
}

/// exp(a) by scaling and squaring of a degree-24 Taylor polynomial.
inline Mat expm(const Mat& a) {
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    while (norm / std::pow(2.0, squarings) > 0.25) ++squarings;
    const Mat x = a / std::pow(2.0, squarings);
    Mat term = Mat::Identity(a.rows(), a.cols());
    Mat sum = term;
    for (int k = 1; k <= 24; ++k) {
        term = term * x / static_cast<double>(k);
        sum += term;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

inline Vec to_vec(const demonlab::qstate::Statevector& psi) {
    const auto a = psi.amplitudes();
    return Eigen::Map<const Vec>(a.data(), static_cast<Eigen::Index>(a.size()));
}

inline Vec basis(int n, std::uint64_t index) {
    Vec v = Vec::Zero(Eigen::Index{1} << n);
    v(static_cast<Eigen::Index>(index)) = 1;
    return v;
}

inline Vec random_vector(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Vec v(Eigen::Index{1} << n);
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = C(g(rng), g(rng));
    return v.normalized();
}

inline demonlab::qstate::Statevector to_state(const Vec& v) {
    return demonlab::qstate::Statevector::from_amplitudes({v.data(), v.data() + v.size()});
}

/// Product of independent random single-qubit states.
inline Vec random_product_vector(int n, std::mt19937_64& rng) {
    Vec out = Vec::Ones(1);
    for (int q = 0; q < n; ++q) out = kron(random_vector(1, rng), out);
    return out;
}

inline double binary_entropy(double p) {
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1 - p) * std::log2(1 - p);
    return h;
}

/// Closed form of the interacting interference probe at time t.
inline double nonlinearity_oracle(double t) { return 2.0 * binary_entropy((1.0 + std::abs(std::cos(2.0 * t))) / 2.0); }

/// -sum p log2 p over eigenvalues of a Hermitian matrix.
inline double entropy_bits(const Mat& rho) {
    Eigen::SelfAdjointEigenSolver<Mat> es(rho, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (double p : es.eigenvalues()) {
        if (p > 1e-14) s -= p * std::log2(p);
    }
    return s;
}

/// Tr over every qubit not in keep, by explicit index arithmetic on the
/// density matrix; keep[j] becomes qubit j of the result.
inline Mat reduce(const Mat& rho, int n, const std::vector<int>& keep) {
    std::vector<int> traced;
    for (int q = 0; q < n; ++q) {
        bool kept = false;
        for (int k : keep) kept = kept || k == q;
        if (!kept) traced.push_back(q);
    }
    const Eigen::Index dk = Eigen::Index{1} << keep.size();
    const Eigen::Index dt = Eigen::Index{1} << traced.size();
    auto full_index = [&](Eigen::Index ik, Eigen::Index it) {
        Eigen::Index idx = 0;
        for (std::size_t j = 0; j < keep.size(); ++j) idx |= ((ik >> j) & 1) << keep[j];
        for (std::size_t j = 0; j < traced.size(); ++j) idx |= ((it >> j) & 1) << traced[j];
        return idx;
    };
    Mat out = Mat::Zero(dk, dk);
    for (Eigen::Index i = 0; i < dk; ++i) {
        for (Eigen::Index j = 0; j < dk; ++j) {
            for (Eigen::Index t = 0; t < dt; ++t) out(i, j) += rho(full_index(i, t), full_index(j, t));
        }
    }
    return out;
}

/// Real dimension of the Lie algebra generated by Hermitian matrices under
/// A, B -> i[A, B]. All pairs are bracketed every round until the span stops
/// growing. Inner product Re Tr(A^dagger B), modified Gram-Schmidt.
inline std::size_t dense_lie_dimension(const std::vector<Mat>& generators, double tol = 1e-8) {
    std::vector<Mat> basis;
    auto try_add = [&](Mat m) {
        const double scale = m.norm();
        if (scale < tol) return false;
        for (int pass = 0; pass < 2; ++pass) {
            for (const Mat& b : basis) m -= (b.adjoint() * m).trace().real() * b;
        }
        if (m.norm() < tol * std::max(1.0, scale)) return false;
        basis.push_back(m / m.norm());
        return true;
    };
    for (const Mat& g : generators) try_add(g);
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t count = basis.size();
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t j = i + 1; j < count; ++j) {
                const Mat c = C(0, 1) * (basis[i] * basis[j] - basis[j] * basis[i]);
                if (try_add(c)) grew = true;
            }
        }
    }
    return basis.size();
}

}  // namespace oracle
