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

#include "demonlab/qstate/density_matrix.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "demonlab/common/error.hpp"
#include "demonlab/qstate/register_layout.hpp"

namespace demonlab::qstate {

namespace {

std::vector<std::uint64_t> offsets_for(std::span<const int> qubits) {
    std::vector<std::uint64_t> out(std::size_t{1} << qubits.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        std::uint64_t off = 0;
        for (std::size_t j = 0; j < qubits.size(); ++j) {
            if ((k >> j) & 1) off |= 1ULL << qubits[j];
        }
        out[k] = off;
    }
    return out;
}

std::vector<int> complement(std::span<const int> qubits, int n) {
    std::uint64_t mask = 0;
    for (int q : qubits) mask |= 1ULL << q;
    std::vector<int> out;
    for (int q = 0; q < n; ++q) {
        if (!(mask & (1ULL << q))) out.push_back(q);
    }
    return out;
}

void check_keep(std::span<const int> keep, int n) {
    if (keep.empty()) throw InvalidArgument("partial trace needs at least one kept qubit");
    check_qubits(keep, n);
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error("eigenvalue solver failed");
    return solver.eigenvalues();
}

// <b^x| P |b> = i^{|x&z|} (-1)^{|b&z|} for phase-free P.
Complex pauli_element(std::uint64_t x, std::uint64_t z, std::uint64_t b) {
    static constexpr Complex kPowers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const Complex base = kPowers[std::popcount(x & z) & 3];
    return (std::popcount(b & z) & 1) ? -base : base;
}

}  // namespace

DensityMatrix trusted_density(int n, Eigen::MatrixXcd m) {
    return DensityMatrix(n, std::move(m));
}

DensityMatrix DensityMatrix::from_matrix(Eigen::MatrixXcd m) {
    const auto dim = static_cast<std::size_t>(m.rows());
    if (m.rows() != m.cols() || dim < 2 || !std::has_single_bit(dim)) {
        throw DimensionError(fmt::format("density matrix must be square 2^n x 2^n, got {}x{}", m.rows(), m.cols()));
    }
    const int n = std::countr_zero(dim);
    if (n > kMaxQubits) throw DimensionError(fmt::format("{} qubits exceeds the dense limit", n));
    const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kHermitianTolerance) throw InvalidState(fmt::format("matrix not Hermitian (deviation {:.3g})", asym));
    const Complex tr = m.trace();
    if (std::abs(tr - 1.0) > kTraceTolerance) {
        throw InvalidState(fmt::format("trace {:.17g}{:+.3g}i is not 1", tr.real(), tr.imag()));
    }
    const double lowest = hermitian_eigenvalues(m).minCoeff();
    if (lowest < -kPsdTolerance) throw InvalidState(fmt::format("negative eigenvalue {:.3g}", lowest));
    return DensityMatrix(n, std::move(m));
}

DensityMatrix DensityMatrix::from_pure(const Statevector& psi) {
    const auto amps = psi.amplitudes();
    Eigen::Map<const Eigen::VectorXcd> v(amps.data(), static_cast<Eigen::Index>(amps.size()));
    return DensityMatrix(psi.num_qubits(), v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int n) {
    if (n < 1 || n > kMaxQubits) throw DimensionError(fmt::format("bad qubit count {}", n));
    const Eigen::Index dim = Eigen::Index{1} << n;
    return DensityMatrix(n, Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::purity() const {
    return (m_ * m_).trace().real();
}

std::string DensityMatrix::debug_json() const {
    std::string out = fmt::format("{{\"n\": {}, \"rows\": [", n_);
    for (Eigen::Index r = 0; r < m_.rows(); ++r) {
        out += r ? ", [" : "[";
        for (Eigen::Index c = 0; c < m_.cols(); ++c) {
            out += fmt::format("{}[{:.17g}, {:.17g}]", c ? ", " : "", m_(r, c).real(), m_(r, c).imag());
        }
        out += "]";
    }
    return out + "]}";
}

DensityMatrix partial_trace(const Statevector& state, std::span<const int> keep) {
    const int n = state.num_qubits();
    check_keep(keep, n);
    const std::vector<int> rest = complement(keep, n);
    const auto off_keep = offsets_for(keep);
    const auto off_rest = offsets_for(rest);
    const auto amps = state.amplitudes();
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(off_keep.size()), static_cast<Eigen::Index>(off_rest.size()));
    for (std::size_t k = 0; k < off_keep.size(); ++k) {
        for (std::size_t r = 0; r < off_rest.size(); ++r) {
            m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(r)) = amps[off_keep[k] | off_rest[r]];
        }
    }
    Eigen::MatrixXcd rho = m * m.adjoint();
    return trusted_density(static_cast<int>(keep.size()), std::move(rho));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
    const int n = rho.num_qubits();
    check_keep(keep, n);
    const std::vector<int> rest = complement(keep, n);
    const auto off_keep = offsets_for(keep);
    const auto off_rest = offsets_for(rest);
    const auto kd = static_cast<Eigen::Index>(off_keep.size());
    const Eigen::MatrixXcd& m = rho.matrix();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(kd, kd);
    for (Eigen::Index i = 0; i < kd; ++i) {
        for (Eigen::Index j = 0; j < kd; ++j) {
            Complex acc = 0.0;
            for (std::uint64_t r : off_rest) {
                acc += m(static_cast<Eigen::Index>(off_keep[static_cast<std::size_t>(i)] | r),
                         static_cast<Eigen::Index>(off_keep[static_cast<std::size_t>(j)] | r));
            }
            out(i, j) = acc;
        }
    }
    return trusted_density(static_cast<int>(keep.size()), std::move(out));
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const Eigen::VectorXd evals = hermitian_eigenvalues(rho.matrix());
    if (evals.minCoeff() < -kPsdTolerance) {
        throw InvalidState(fmt::format("density matrix has eigenvalue {:.3g}", evals.minCoeff()));
    }
    double s = 0.0;
    for (double lambda : evals) {
        if (lambda > kEntropyClamp) s -= lambda * std::log2(lambda);
    }
    return s;
}

double mutual_information(const Statevector& joint, std::span<const int> a, std::span<const int> b) {
    check_bipartition(a, b, joint.num_qubits());
    return von_neumann_entropy(partial_trace(joint, a)) + von_neumann_entropy(partial_trace(joint, b));
}

double mutual_information(const DensityMatrix& joint, std::span<const int> a, std::span<const int> b) {
    check_bipartition(a, b, joint.num_qubits());
    return von_neumann_entropy(partial_trace(joint, a)) + von_neumann_entropy(partial_trace(joint, b)) -
           von_neumann_entropy(joint);
}

double log_negativity(const DensityMatrix& joint, std::span<const int> a, std::span<const int> b) {
    check_bipartition(a, b, joint.num_qubits());
    const auto off_a = offsets_for(a);
    const auto off_b = offsets_for(b);
    const Eigen::MatrixXcd& m = joint.matrix();
    Eigen::MatrixXcd pt(m.rows(), m.cols());
    for (std::uint64_t ia : off_a) {
        for (std::uint64_t ib : off_b) {
            const auto row = static_cast<Eigen::Index>(ia | ib);
            for (std::uint64_t ja : off_a) {
                for (std::uint64_t jb : off_b) {
                    pt(row, static_cast<Eigen::Index>(ja | jb)) =
                        m(static_cast<Eigen::Index>(ja | ib), static_cast<Eigen::Index>(ia | jb));
                }
            }
        }
    }
    const Eigen::VectorXd evals = hermitian_eigenvalues(pt);
    return std::max(0.0, std::log2(evals.cwiseAbs().sum()));
}

double log_negativity(const Statevector& joint, std::span<const int> a, std::span<const int> b) {
    check_bipartition(a, b, joint.num_qubits());
    // Singular values of the amplitude matrix are the Schmidt coefficients;
    // taking them directly avoids square roots of rounding-level eigenvalues.
    const auto off_a = offsets_for(a);
    const auto off_b = offsets_for(b);
    const auto amps = joint.amplitudes();
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(off_a.size()), static_cast<Eigen::Index>(off_b.size()));
    for (std::size_t i = 0; i < off_a.size(); ++i) {
        for (std::size_t j = 0; j < off_b.size(); ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = amps[off_a[i] | off_b[j]];
        }
    }
    const Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    return std::max(0.0, 2.0 * std::log2(svd.singularValues().sum()));
}

double expectation(const Statevector& state, const pauli::PauliSum& h) {
    if (h.num_qubits() != state.num_qubits()) {
        throw DimensionError(fmt::format("Hamiltonian on {} qubits, state on {}", h.num_qubits(), state.num_qubits()));
    }
    const auto amps = state.amplitudes();
    double total = 0.0;
    for (const pauli::PauliTerm& t : h.terms()) {
        const std::uint64_t x = t.op.x_mask();
        const std::uint64_t z = t.op.z_mask();
        Complex acc = 0.0;
        for (std::uint64_t b = 0; b < amps.size(); ++b) {
            acc += std::conj(amps[b ^ x]) * pauli_element(x, z, b) * amps[b];
        }
        total += t.coefficient * acc.real();
    }
    return total;
}

double expectation(const DensityMatrix& rho, const pauli::PauliSum& h) {
    if (h.num_qubits() != rho.num_qubits()) {
        throw DimensionError(fmt::format("Hamiltonian on {} qubits, state on {}", h.num_qubits(), rho.num_qubits()));
    }
    const Eigen::MatrixXcd& m = rho.matrix();
    const auto dim = static_cast<std::uint64_t>(m.rows());
    double total = 0.0;
    for (const pauli::PauliTerm& t : h.terms()) {
        const std::uint64_t x = t.op.x_mask();
        const std::uint64_t z = t.op.z_mask();
        Complex acc = 0.0;
        // Tr(rho P) = sum_b P[b^x, b] rho[b, b^x]
        for (std::uint64_t b = 0; b < dim; ++b) {
            acc += pauli_element(x, z, b) * m(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b ^ x));
        }
        total += t.coefficient * acc.real();
    }
    return total;
}

}  // namespace demonlab::qstate
