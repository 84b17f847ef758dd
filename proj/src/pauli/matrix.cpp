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

#include "demonlab/pauli/matrix.hpp"

#include <fmt/format.h>

#include <bit>

#include "demonlab/common/error.hpp"

namespace demonlab::pauli {

namespace {

void check_size(int actual, int n) {
    if (n < 0 || n > kMaxMatrixQubits) {
        throw DimensionError(fmt::format("dense matrix limited to {} qubits, asked for {}",
                                         kMaxMatrixQubits, n));
    }
    if (actual != n) {
        throw DimensionError(fmt::format("operator has {} qubits, matrix requested for {}", actual, n));
    }
}

// P|b> = i^(phase + |x&z|) (-1)^{|b&z|} |b ^ x>, since Y|b> = i (-1)^b |b^1>.
void accumulate(Eigen::MatrixXcd& m, const PauliString& p, std::complex<double> scale) {
    const std::uint64_t x = p.x_mask();
    const std::uint64_t z = p.z_mask();
    const int y_count = std::popcount(x & z);
    const PauliString phase_only(0, 0, 0, static_cast<std::uint8_t>(p.phase() + y_count));
    const std::complex<double> base = scale * phase_only.phase_factor();
    const Eigen::Index dim = m.rows();
    for (Eigen::Index col = 0; col < dim; ++col) {
        const auto b = static_cast<std::uint64_t>(col);
        const bool odd = std::popcount(b & z) & 1;
        m(static_cast<Eigen::Index>(b ^ x), col) += odd ? -base : base;
    }
}

}  // namespace

Eigen::MatrixXcd pauli_to_matrix(const PauliString& p, int n) {
    check_size(p.num_qubits(), n);
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    accumulate(m, p, 1.0);
    return m;
}

Eigen::MatrixXcd pauli_to_matrix(const PauliSum& h, int n) {
    check_size(h.num_qubits(), n);
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const PauliTerm& t : h.terms()) accumulate(m, t.op, t.coefficient);
    return m;
}

}  // namespace demonlab::pauli
