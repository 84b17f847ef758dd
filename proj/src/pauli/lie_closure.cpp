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

#include "demonlab/pauli/lie_closure.hpp"

#include <fmt/format.h>

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_set>

#include "demonlab/common/error.hpp"

namespace demonlab::pauli {

namespace {

std::uint64_t set_key(const PauliString& p) {
    return p.x_mask() | (p.z_mask() << 32);
}

std::size_t full_algebra_dim(int n) {
    if (2 * n >= 64) return std::numeric_limits<std::size_t>::max();
    return (std::size_t{1} << (2 * n)) - 1;
}

// Exponent m in P*Q = i^m R for phase-free P, Q (Y stored literally).
// Per qubit: (X,Y), (Y,Z), (Z,X) contribute +1 and the reversed pairs -1.
int product_exponent(std::uint64_t x1, std::uint64_t z1, std::uint64_t x2, std::uint64_t z2) {
    const std::uint64_t ax = x1 & ~z1, ay = x1 & z1, az = ~x1 & z1;
    const std::uint64_t bx = x2 & ~z2, by = x2 & z2, bz = ~x2 & z2;
    const int plus = std::popcount(ax & by) + std::popcount(ay & bz) + std::popcount(az & bx);
    const int minus = std::popcount(ax & bz) + std::popcount(az & by) + std::popcount(ay & bx);
    return ((plus - minus) % 4 + 4) % 4;
}

}  // namespace

// ---------------------------------------------------------------------------
// Set closure
// ---------------------------------------------------------------------------

LieBasis lie_closure(std::span<const PauliString> generators, std::size_t cap) {
    LieBasis basis;
    if (generators.empty()) return basis;
    basis.n = generators.front().num_qubits();
    if (cap == 0) cap = full_algebra_dim(basis.n);

    std::unordered_set<std::uint64_t> seen;
    std::vector<PauliString>& elems = basis.elements;
    for (const PauliString& g : generators) {
        if (g.num_qubits() != basis.n) {
            throw DimensionError("generators act on different qubit counts");
        }
        if (g.is_identity()) continue;
        const PauliString p = g.phase_free();
        if (seen.insert(set_key(p)).second) elems.push_back(p);
    }
    if (elems.size() > cap) {
        throw InvalidArgument(fmt::format("closure cap {} is below the {} distinct generators", cap,
                                          elems.size()));
    }

    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const std::optional<PauliString> c = pauli_commutator(elems[i], elems[j]);
            if (!c || seen.contains(set_key(*c))) continue;
            if (elems.size() >= cap) {
                basis.truncated = true;
                std::sort(elems.begin(), elems.end());
                return basis;
            }
            seen.insert(set_key(*c));
            elems.push_back(*c);
        }
    }
    std::sort(elems.begin(), elems.end());
    return basis;
}

std::vector<PauliString> dla_generating_set(const PauliSum& h, int n) {
    if (h.num_qubits() != n) {
        throw DimensionError(fmt::format("Hamiltonian has {} qubits, expected {}", h.num_qubits(), n));
    }
    std::vector<PauliString> out;
    std::unordered_set<std::uint64_t> seen;
    auto push = [&](const PauliString& p) {
        if (!p.is_identity() && seen.insert(set_key(p)).second) out.push_back(p);
    };
    for (const PauliTerm& t : h.terms()) push(t.op);
    for (int q = 0; q < n; ++q) push(PauliString::single(n, q, 'Y'));
    for (int q = 0; q < n; ++q) push(PauliString::single(n, q, 'Z'));
    return out;
}

std::size_t WeightHistogram::total() const {
    std::size_t sum = 0;
    for (const auto& [w, c] : counts) sum += c;
    return sum;
}

WeightHistogram pauli_weight_histogram(const LieBasis& basis) {
    if (basis.elements.empty()) throw InvalidArgument("weight histogram of an empty basis");
    WeightHistogram hist;
    double weighted = 0.0;
    for (const PauliString& p : basis.elements) {
        ++hist.counts[p.weight()];
        weighted += p.weight();
    }
    hist.mean_weight = weighted / static_cast<double>(basis.elements.size());
    return hist;
}

nlohmann::ordered_json to_json(const LieBasis& basis) {
    nlohmann::ordered_json weights = nlohmann::ordered_json::object();
    if (!basis.elements.empty()) {
        for (const auto& [w, c] : pauli_weight_histogram(basis).counts) weights[std::to_string(w)] = c;
    }
    return {{"n", basis.n}, {"dim", basis.dim()}, {"truncated", basis.truncated}, {"weights", weights}};
}

// ---------------------------------------------------------------------------
// Span closure
// ---------------------------------------------------------------------------

std::size_t pauli_index(const PauliString& p) {
    return static_cast<std::size_t>(p.x_mask() | (p.z_mask() << p.num_qubits()));
}

PauliString pauli_from_index(int n, std::size_t index) {
    const std::uint64_t mask = (1ULL << n) - 1;
    return PauliString(n, index & mask, (index >> n) & mask);
}

namespace {

struct SparseTerm {
    double coefficient;
    std::uint64_t x;
    std::uint64_t z;
    std::size_t index;
};

std::vector<SparseTerm> to_sparse(const PauliSum& h) {
    std::vector<SparseTerm> out;
    for (const PauliTerm& t : h.terms()) {
        out.push_back({t.coefficient, t.op.x_mask(), t.op.z_mask(), pauli_index(t.op)});
    }
    return out;
}

// out = i[G, v] for Hermitian G and v given in Pauli coordinates.
void bracket(const std::vector<SparseTerm>& g, const Eigen::VectorXd& v, int n, Eigen::VectorXd& out) {
    out.setZero();
    const std::uint64_t mask = (1ULL << n) - 1;
    for (Eigen::Index q = 0; q < v.size(); ++q) {
        const double vq = v[q];
        if (vq == 0.0) continue;
        const auto qi = static_cast<std::uint64_t>(q);
        const std::uint64_t qx = qi & mask;
        const std::uint64_t qz = qi >> n;
        for (const SparseTerm& t : g) {
            const int m = product_exponent(t.x, t.z, qx, qz);
            if ((m & 1) == 0) continue;  // commuting pair
            // i * (PQ - QP) = 2i * i^m R = -2R (m = 1) or +2R (m = 3)
            out[static_cast<Eigen::Index>(t.index ^ qi)] += (m == 1 ? -2.0 : 2.0) * t.coefficient * vq;
        }
    }
}

}  // namespace

AlgebraBasis lie_closure_span(std::span<const PauliSum> generators, std::size_t cap, double tolerance) {
    AlgebraBasis result;
    if (generators.empty()) return result;
    const int n = generators.front().num_qubits();
    if (n > kMaxSpanQubits) {
        throw DimensionError(fmt::format("span closure limited to {} qubits, got {}", kMaxSpanQubits, n));
    }
    result.n = n;
    if (cap == 0) cap = full_algebra_dim(n);
    const auto coord_dim = static_cast<Eigen::Index>(std::size_t{1} << (2 * n));
    const std::size_t identity_index = 0;

    std::vector<std::vector<SparseTerm>> gens;
    std::vector<Eigen::VectorXd> basis;

    // Returns true when the candidate was independent (inserted or would have been).
    auto try_insert = [&](Eigen::VectorXd& c) -> bool {
        c[static_cast<Eigen::Index>(identity_index)] = 0.0;  // u(1) part is central
        const double scale = std::max(1.0, c.norm());
        for (int pass = 0; pass < 2; ++pass) {
            for (const Eigen::VectorXd& b : basis) c -= b.dot(c) * b;
        }
        const double residual = c.norm();
        if (residual <= tolerance * scale) return false;
        if (basis.size() >= cap) {
            result.truncated = true;
            return true;
        }
        basis.push_back(c / residual);
        return true;
    };

    for (const PauliSum& g : generators) {
        if (g.num_qubits() != n) throw DimensionError("generators act on different qubit counts");
        gens.push_back(to_sparse(g));
        Eigen::VectorXd v = Eigen::VectorXd::Zero(coord_dim);
        for (const SparseTerm& t : gens.back()) v[static_cast<Eigen::Index>(t.index)] += t.coefficient;
        try_insert(v);
        if (result.truncated) break;
    }

    Eigen::VectorXd candidate(coord_dim);
    for (std::size_t i = 0; i < basis.size() && !result.truncated; ++i) {
        for (const auto& g : gens) {
            const Eigen::VectorXd current = basis[i];
            bracket(g, current, n, candidate);
            try_insert(candidate);
            if (result.truncated) break;
        }
    }

    result.elements.reserve(basis.size());
    for (const Eigen::VectorXd& b : basis) result.elements.emplace_back(b.data(), b.data() + b.size());
    return result;
}

std::vector<PauliSum> dla_sum_generators(const PauliSum& h) {
    const int n = h.num_qubits();
    std::vector<PauliTerm> mixer;
    for (int q = 0; q < n; ++q) mixer.push_back({1.0, PauliString::single(n, q, 'X')});
    std::vector<PauliSum> out;
    PauliSum coupling = h.filtered_by_weight(2, n);
    if (!coupling.empty()) out.push_back(std::move(coupling));
    out.emplace_back(n, mixer);
    return out;
}

double WeightProfile::total() const {
    double sum = 0.0;
    for (const auto& [w, m] : mass) sum += m;
    return sum;
}

WeightProfile algebra_weight_profile(const AlgebraBasis& basis) {
    if (basis.elements.empty()) throw InvalidArgument("weight profile of an empty basis");
    const std::size_t coord_dim = basis.elements.front().size();
    std::vector<double> diag(coord_dim, 0.0);
    for (const auto& v : basis.elements) {
        for (std::size_t p = 0; p < coord_dim; ++p) diag[p] += v[p] * v[p];
    }
    WeightProfile profile;
    double weighted = 0.0;
    for (std::size_t p = 0; p < coord_dim; ++p) {
        if (diag[p] == 0.0) continue;
        const int w = pauli_from_index(basis.n, p).weight();
        profile.mass[w] += diag[p];
        weighted += w * diag[p];
    }
    profile.mean_weight = weighted / profile.total();
    return profile;
}

nlohmann::ordered_json to_json(const AlgebraBasis& basis) {
    nlohmann::ordered_json weights = nlohmann::ordered_json::object();
    double mean = 0.0;
    if (!basis.elements.empty()) {
        const WeightProfile profile = algebra_weight_profile(basis);
        for (const auto& [w, m] : profile.mass) weights[std::to_string(w)] = m;
        mean = profile.mean_weight;
    }
    return {{"n", basis.n},
            {"dim", basis.dim()},
            {"truncated", basis.truncated},
            {"mean_weight", mean},
            {"weights", weights}};
}

}  // namespace demonlab::pauli
