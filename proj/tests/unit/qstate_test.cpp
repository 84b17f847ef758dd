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

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "demonlab/common/error.hpp"
#include "demonlab/pauli/hamiltonians.hpp"
#include "demonlab/qstate/density_matrix.hpp"
#include "demonlab/qstate/register_layout.hpp"
#include "demonlab/qstate/statevector.hpp"
#include "support/oracles.hpp"

namespace demonlab::qstate {
namespace {

using oracle::Mat;
using oracle::Vec;

double distance(const Statevector& psi, const Vec& expected) { return (oracle::to_vec(psi) - expected).norm(); }

Statevector bell() {
    Statevector psi(2);
    const int q0[] = {0};
    const int q1[] = {1};
    psi = apply_gate(psi, Gate{GateKind::kH}, q0);
    return apply_gate(psi, Gate{GateKind::kCNOT}, q1, q0);
}

TEST(Statevector, StartsInZeroAndValidates) {
    const Statevector psi(3);
    EXPECT_EQ(psi.dim(), 8u);
    EXPECT_EQ(psi.amplitude(0), Complex(1.0));
    EXPECT_THROW(Statevector(0), DimensionError);
    EXPECT_THROW(Statevector(kMaxQubits + 1), DimensionError);
    EXPECT_THROW(Statevector::from_amplitudes({1.0, 1.0}), InvalidState);
    EXPECT_THROW(Statevector::from_amplitudes({1.0, 0.0, 0.0}), DimensionError);
}

TEST(Statevector, TensorPutsSecondFactorOnHighQubits) {
    const Statevector lo = Statevector::basis_state(1, 1);
    const Statevector hi = Statevector::basis_state(2, 2);
    const Statevector joint = lo.tensor(hi);
    EXPECT_EQ(joint.num_qubits(), 3);
    EXPECT_EQ(joint.amplitude(0b101), Complex(1.0));
}

TEST(Gates, SingleQubitGatesMatchKroneckerOracle) {
    std::mt19937_64 rng(1);
    const Vec v = oracle::random_vector(3, rng);
    const Statevector psi = oracle::to_state(v);
    struct Case {
        GateKind kind;
        char axis;
    };
    for (int q = 0; q < 3; ++q) {
        const int t[] = {q};
        EXPECT_LT(distance(apply_gate(psi, Gate{GateKind::kH}, t), oracle::embed(oracle::hadamard(), q, 3) * v), 1e-12);
        for (const Case c : {Case{GateKind::kRX, 'X'}, Case{GateKind::kRY, 'Y'}, Case{GateKind::kRZ, 'Z'}}) {
            const Vec expected = oracle::embed(oracle::rot(c.axis, 0.7), q, 3) * v;
            EXPECT_LT(distance(apply_gate(psi, Gate{c.kind, 0.7}, t), expected), 1e-12);
        }
    }
}

TEST(Gates, ControlledGatesMatchKroneckerOracle) {
    std::mt19937_64 rng(2);
    const Vec v = oracle::random_vector(3, rng);
    const Statevector psi = oracle::to_state(v);
    for (int c = 0; c < 3; ++c) {
        for (int t = 0; t < 3; ++t) {
            if (c == t) continue;
            const int ctl[] = {c};
            const int tgt[] = {t};
            EXPECT_LT(distance(apply_gate(psi, Gate{GateKind::kCNOT}, tgt, ctl),
                               oracle::controlled(oracle::pauli1('X'), c, t, 3) * v),
                      1e-12);
            EXPECT_LT(distance(apply_gate(psi, Gate{GateKind::kCRX, 1.1}, tgt, ctl),
                               oracle::controlled(oracle::rot('X', 1.1), c, t, 3) * v),
                      1e-12);
            EXPECT_LT(distance(apply_gate(psi, Gate{GateKind::kCRY, -0.4}, tgt, ctl),
                               oracle::controlled(oracle::rot('Y', -0.4), c, t, 3) * v),
                      1e-12);
        }
    }
}

TEST(Gates, AntiControlFiresOnZero) {
    std::mt19937_64 rng(3);
    const Vec v = oracle::random_vector(2, rng);
    const int anti[] = {1};
    const int tgt[] = {0};
    const Mat expected = oracle::kron(oracle::projector(0), oracle::rot('X', 0.9)) +
                         oracle::kron(oracle::projector(1), Mat::Identity(2, 2));
    const Statevector out = apply_gate(oracle::to_state(v), Gate{GateKind::kRX, 0.9}, tgt, {}, anti);
    EXPECT_LT(distance(out, expected * v), 1e-12);
}

TEST(Gates, BadQubitsThrow) {
    const Statevector psi(2);
    const int out_of_range[] = {2};
    const int dup[] = {0, 0};
    const int q0[] = {0};
    EXPECT_THROW(apply_gate(psi, Gate{GateKind::kH}, out_of_range), InvalidArgument);
    EXPECT_THROW(apply_gate(psi, Gate{GateKind::kH}, dup), InvalidArgument);
    EXPECT_THROW(apply_gate(psi, Gate{GateKind::kCNOT}, q0), InvalidArgument);
    EXPECT_THROW(apply_gate(psi, Gate{GateKind::kCNOT}, q0, q0), InvalidArgument);
}

TEST(Gates, RandomCircuitsPreserveNorm) {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> pick(0, 6);
    std::uniform_int_distribution<int> qubit(0, 4);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    Statevector psi(5);
    for (int step = 0; step < 400; ++step) {
        const auto kind = static_cast<GateKind>(pick(rng));
        const int t = qubit(rng);
        int c = qubit(rng);
        if (c == t) c = (t + 1) % 5;
        const int tgt[] = {t};
        const int ctl[] = {c};
        const bool needs_control = kind == GateKind::kCNOT || kind == GateKind::kCRX || kind == GateKind::kCRY;
        psi = needs_control ? apply_gate(psi, Gate{kind, angle(rng)}, tgt, ctl)
                            : apply_gate(psi, Gate{kind, angle(rng)}, tgt);
    }
    EXPECT_NEAR(psi.norm(), 1.0, 1e-10);
}

TEST(Evolution, MatchesTaylorExponential) {
    const pauli::PauliSum h = pauli::build_sk_hamiltonian(3, 6);
    std::mt19937_64 rng(5);
    const Vec v = oracle::random_vector(3, rng);
    const int targets[] = {0, 1, 2};
    for (double tau : {0.0, 0.3, 1.5}) {
        const Vec expected = oracle::expm(oracle::C(0, -tau) * oracle::sum_matrix(h)) * v;
        EXPECT_LT(distance(evolve(oracle::to_state(v), h, tau, targets), expected), 1e-10);
    }
}

TEST(Evolution, TargetsPermuteHamiltonianQubits) {
    const pauli::PauliSum h(2, {{0.8, pauli::PauliString::from_str("XZ")}});
    std::mt19937_64 rng(6);
    const Vec v = oracle::random_vector(3, rng);
    const int targets[] = {2, 0};
    // H qubit 0 -> register qubit 2, H qubit 1 -> register qubit 0: Z_0 X_2
    const Mat h_reg = 0.8 * oracle::pauli_matrix("ZIX");
    const Vec expected = oracle::expm(oracle::C(0, -0.9) * h_reg) * v;
    EXPECT_LT(distance(evolve(oracle::to_state(v), h, 0.9, targets), expected), 1e-10);
}

TEST(Evolution, ControlledMatchesOracle) {
    const pauli::PauliSum h = pauli::build_complete_graph_hamiltonian(2, 1.0, 7);
    std::mt19937_64 rng(7);
    const Vec v = oracle::random_vector(3, rng);
    const int targets[] = {0, 1};
    const Mat u = oracle::expm(oracle::C(0, -0.6) * oracle::sum_matrix(h));
    const Mat expected = oracle::kron(oracle::projector(0), Mat::Identity(4, 4)) + oracle::kron(oracle::projector(1), u);
    EXPECT_LT(distance(evolve_controlled(oracle::to_state(v), h, 0.6, 2, targets), expected * v), 1e-10);
}

TEST(Evolution, ZeroTimeIsExactAndNegativeThrows) {
    const pauli::PauliSum h = pauli::build_sk_hamiltonian(2, 1);
    std::mt19937_64 rng(8);
    const Statevector psi = oracle::to_state(oracle::random_vector(2, rng));
    const int targets[] = {0, 1};
    const Statevector same = evolve(psi, h, 0.0, targets);
    for (std::size_t i = 0; i < psi.dim(); ++i) EXPECT_EQ(same.amplitude(i), psi.amplitude(i));
    EXPECT_THROW(evolve(psi, h, -0.1, targets), InvalidArgument);
    const int one[] = {0};
    EXPECT_THROW(evolve(psi, h, 0.1, one), DimensionError);
}

TEST(Evolution, PreservesNormAndEnergy) {
    const pauli::PauliSum h = pauli::build_sk_hamiltonian(4, 2);
    std::mt19937_64 rng(9);
    const Statevector psi = oracle::to_state(oracle::random_vector(4, rng));
    const int targets[] = {0, 1, 2, 3};
    const Statevector out = evolve(psi, h, 1.3, targets);
    EXPECT_NEAR(out.norm(), 1.0, 1e-10);
    EXPECT_NEAR(expectation(out, h), expectation(psi, h), 1e-10);
}

TEST(DensityMatrix, ValidatesInput) {
    Mat bad = Mat::Identity(2, 2);
    EXPECT_THROW(DensityMatrix::from_matrix(bad), InvalidState);  // trace 2
    Mat neg(2, 2);
    neg << 1.5, 0, 0, -0.5;
    EXPECT_THROW(DensityMatrix::from_matrix(neg), InvalidState);
    Mat nonherm(2, 2);
    nonherm << 0.5, 0.1, 0.0, 0.5;
    EXPECT_THROW(DensityMatrix::from_matrix(nonherm), InvalidState);
    EXPECT_NO_THROW(DensityMatrix::maximally_mixed(3));
}

TEST(PartialTrace, MatchesIndexOracle) {
    std::mt19937_64 rng(10);
    const Vec v = oracle::random_vector(4, rng);
    const Mat rho = v * v.adjoint();
    for (const std::vector<int>& keep : {std::vector<int>{0}, std::vector<int>{2, 0}, std::vector<int>{1, 3, 2}}) {
        const Mat expected = oracle::reduce(rho, 4, keep);
        EXPECT_LT((partial_trace(oracle::to_state(v), keep).matrix() - expected).norm(), 1e-12);
        EXPECT_LT((partial_trace(DensityMatrix::from_pure(oracle::to_state(v)), keep).matrix() - expected).norm(), 1e-12);
    }
}

TEST(PartialTrace, StepwiseEqualsOneShot) {
    std::mt19937_64 rng(11);
    const Statevector psi = oracle::to_state(oracle::random_vector(4, rng));
    const int first[] = {0, 1, 3};
    const int then[] = {0, 2};  // qubits 0 and 3 of the original
    const int direct[] = {0, 3};
    const DensityMatrix stepwise = partial_trace(partial_trace(psi, first), then);
    EXPECT_LT((stepwise.matrix() - partial_trace(psi, direct).matrix()).norm(), 1e-12);
}

TEST(Entropy, BoundsAndKnownValues) {
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(3)), 3.0, 1e-12);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix::from_pure(Statevector(2))), 0.0, 1e-12);
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const Statevector psi = oracle::to_state(oracle::random_vector(4, rng));
        const int keep[] = {0, 1};
        const DensityMatrix rho = partial_trace(psi, keep);
        const double s = von_neumann_entropy(rho);
        EXPECT_GE(s, -1e-12);
        EXPECT_LE(s, 2.0 + 1e-12);
        EXPECT_NEAR(s, oracle::entropy_bits(rho.matrix()), 1e-10);
    }
}

TEST(MutualInformation, PureStateIsTwiceEntropy) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const Statevector psi = oracle::to_state(oracle::random_vector(5, rng));
        const int a[] = {3, 4};
        const int b[] = {0, 1, 2};
        const double i = mutual_information(psi, a, b);
        EXPECT_NEAR(i, 2.0 * von_neumann_entropy(partial_trace(psi, a)), 1e-10);
        EXPECT_NEAR(i, mutual_information(DensityMatrix::from_pure(psi), a, b), 1e-10);
    }
}

TEST(MutualInformation, ClassicalCorrelationIsOneBit) {
    Mat rho = Mat::Zero(4, 4);
    rho(0, 0) = 0.5;
    rho(3, 3) = 0.5;
    const DensityMatrix classical = DensityMatrix::from_matrix(rho);
    const int a[] = {0};
    const int b[] = {1};
    EXPECT_NEAR(mutual_information(classical, a, b), 1.0, 1e-12);
    EXPECT_NEAR(log_negativity(classical, a, b), 0.0, 1e-12);
}

TEST(MutualInformation, BipartitionMustCoverRegister) {
    const Statevector psi(3);
    const int a[] = {0};
    const int b[] = {1};
    EXPECT_THROW(mutual_information(psi, a, b), InvalidArgument);
}

TEST(LogNegativity, BellStateIsOne) {
    const int a[] = {0};
    const int b[] = {1};
    EXPECT_NEAR(log_negativity(bell(), a, b), 1.0, 1e-12);
    EXPECT_NEAR(log_negativity(DensityMatrix::from_pure(bell()), a, b), 1.0, 1e-12);
}

TEST(LogNegativity, ProductStatesAreZero) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        const Statevector psi = oracle::to_state(oracle::random_product_vector(4, rng));
        const int a[] = {0, 2};
        const int b[] = {1, 3};
        EXPECT_NEAR(log_negativity(psi, a, b), 0.0, 1e-9);
        EXPECT_NEAR(log_negativity(DensityMatrix::from_pure(psi), a, b), 0.0, 1e-9);
    }
}

TEST(LogNegativity, PureAndMixedRoutesAgree) {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 10; ++trial) {
        const Statevector psi = oracle::to_state(oracle::random_vector(4, rng));
        const int a[] = {3};
        const int b[] = {0, 1, 2};
        const double pure = log_negativity(psi, a, b);
        EXPECT_GE(pure, 0.0);
        EXPECT_NEAR(pure, log_negativity(DensityMatrix::from_pure(psi), a, b), 1e-9);
    }
}

TEST(Expectation, MatchesMatrixOracle) {
    const pauli::PauliSum h = pauli::build_sk_hamiltonian(3, 3);
    std::mt19937_64 rng(16);
    const Vec v = oracle::random_vector(3, rng);
    const double expected = (v.adjoint() * oracle::sum_matrix(h) * v)(0).real();
    EXPECT_NEAR(expectation(oracle::to_state(v), h), expected, 1e-12);
    EXPECT_NEAR(expectation(DensityMatrix::from_pure(oracle::to_state(v)), h), expected, 1e-12);
    EXPECT_THROW(expectation(Statevector(2), h), DimensionError);
}

TEST(RegisterLayout, ContiguousLayoutAndValidation) {
    const RegisterLayout l = RegisterLayout::contiguous(3, 2, 1);
    EXPECT_EQ(l.num_qubits(), 6);
    EXPECT_EQ(l.system, (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(l.ancillae, (std::vector<int>{3, 4}));
    EXPECT_NO_THROW(l.validate());
    RegisterLayout overlap{{0, 1}, {1}, {}};
    EXPECT_THROW(overlap.validate(), InvalidArgument);
}

}  // namespace
}  // namespace demonlab::qstate
