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

#include "demonlab/protocols/demon.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>

#include "demonlab/common/error.hpp"
#include "demonlab/qstate/register_layout.hpp"

namespace demonlab::protocols {

using qstate::DensityMatrix;
using qstate::Gate;
using qstate::GateKind;
using qstate::Statevector;

namespace {

constexpr double kInfoTolerance = 1e-9;

const DemonConfig& validated(const DemonConfig& config) {
    config.validate();
    return config;
}

void check_norm(const Statevector& psi) {
    const double drift = std::abs(psi.norm() - 1.0);
    if (drift > qstate::kNormTolerance) {
        throw InvariantViolation(fmt::format("statevector norm drifted by {:.3g}", drift));
    }
}

}  // namespace

void DemonConfig::validate() const {
    if (n_system < kMinSystemQubits || n_system > kMaxSystemQubits) {
        throw InvalidArgument(fmt::format("system size must be in [{}, {}], got {}", kMinSystemQubits,
                                          kMaxSystemQubits, n_system));
    }
    if (hamiltonian.num_qubits() != n_system) {
        throw DimensionError(fmt::format("Hamiltonian acts on {} qubits, system has {}",
                                         hamiltonian.num_qubits(), n_system));
    }
    if (!(theta_gain >= 0.0 && theta_gain <= std::numbers::pi)) {
        throw InvalidArgument(fmt::format("theta_gain must be in [0, pi], got {}", theta_gain));
    }
    if (k_ancillae < 1 || n_system + k_ancillae > qstate::kMaxQubits) {
        throw InvalidArgument(fmt::format("ancilla count {} invalid for {} system qubits", k_ancillae, n_system));
    }
    if (ansatz_layers < 1) throw InvalidArgument("ansatz_layers must be >= 1");
    if (feedback_qubit < 0 || feedback_qubit >= n_system) {
        throw InvalidArgument(fmt::format("feedback qubit {} outside the system register", feedback_qubit));
    }
}

CoherentDemon::CoherentDemon(DemonConfig config)
    : config_(validated(config)),
      propagator_(config_.hamiltonian),
      joint_hamiltonian_(config_.hamiltonian.embedded(config_.n_system + config_.k_ancillae)) {}

DemonStepResult CoherentDemon::step(const Statevector& system, double tau) const {
    if (system.num_qubits() != config_.n_system) {
        throw DimensionError(fmt::format("state has {} qubits, demon expects {}", system.num_qubits(), config_.n_system));
    }
    std::vector<Component> ensemble;
    ensemble.push_back({1.0, system.tensor(Statevector(config_.k_ancillae))});
    return run(std::move(ensemble), 0.0, tau);
}

DemonStepResult CoherentDemon::step(const DensityMatrix& system, double tau) const {
    if (system.num_qubits() != config_.n_system) {
        throw DimensionError(fmt::format("state has {} qubits, demon expects {}", system.num_qubits(), config_.n_system));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(system.matrix());
    if (solver.info() != Eigen::Success) throw Error("eigendecomposition of the system state failed");
    const Statevector ancillae(config_.k_ancillae);
    std::vector<Component> ensemble;
    for (Eigen::Index c = 0; c < solver.eigenvalues().size(); ++c) {
        const double p = solver.eigenvalues()[c];
        if (p <= qstate::kEntropyClamp) continue;
        Eigen::VectorXcd v = solver.eigenvectors().col(c);
        v.normalize();
        const Statevector component = Statevector::from_amplitudes({v.data(), v.data() + v.size()});
        ensemble.push_back({p, component.tensor(ancillae)});
    }
    // Unitary phases preserve the spectrum, so S(SA) equals S(rho_S) on entry.
    return run(std::move(ensemble), qstate::von_neumann_entropy(system), tau);
}

DemonStepResult CoherentDemon::run(std::vector<Component> ensemble, double joint_entropy, double tau) const {
    if (!(tau >= 0.0)) throw InvalidArgument(fmt::format("sensing time must be >= 0, got {}", tau));
    const int n_sys = config_.n_system;
    const int k = config_.k_ancillae;
    const int n = n_sys + k;
    const std::vector<int> sys = qstate::qubit_range(0, n_sys);
    const std::vector<int> anc = qstate::qubit_range(n_sys, k);
    const bool pure = ensemble.size() == 1;

    auto energy = [&] {
        double e = 0.0;
        for (const Component& c : ensemble) e += c.weight * qstate::expectation(c.joint, joint_hamiltonian_);
        return e;
    };
    auto reduced = [&](std::span<const int> keep) {
        const Eigen::Index d = Eigen::Index{1} << keep.size();
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
        for (const Component& c : ensemble) acc += c.weight * qstate::partial_trace(c.joint, keep).matrix();
        return qstate::trusted_density(static_cast<int>(keep.size()), std::move(acc));
    };

    DemonStepRecord rec;
    rec.tau = tau;
    rec.k = k;
    for (int j = 0; j < k; ++j) {
        const int ancilla[] = {n_sys + j};
        const int feedback[] = {config_.feedback_qubit};
        for (Component& c : ensemble) {
            // Sensing
            c.joint = qstate::apply_gate(c.joint, Gate{GateKind::kH}, ancilla);
            c.joint = qstate::evolve_controlled(c.joint, propagator_, tau, n_sys + j, sys);
            // Correlation
            c.joint = qstate::apply_gate(c.joint, Gate{GateKind::kH}, ancilla);
        }
        if (j == 0) rec.energy_before = energy();
        if (j == k - 1) {
            const double s_sys = qstate::von_neumann_entropy(reduced(sys));
            rec.ancilla_entropy = qstate::von_neumann_entropy(reduced(anc));
            rec.mutual_info = s_sys + rec.ancilla_entropy - joint_entropy;
            if (pure) {
                rec.log_neg = qstate::log_negativity(ensemble.front().joint, anc, sys);
            } else {
                const Eigen::Index d = Eigen::Index{1} << n;
                Eigen::MatrixXcd joint = Eigen::MatrixXcd::Zero(d, d);
                for (const Component& c : ensemble) {
                    const auto amps = c.joint.amplitudes();
                    Eigen::Map<const Eigen::VectorXcd> v(amps.data(), d);
                    joint += c.weight * (v * v.adjoint());
                }
                rec.log_neg = qstate::log_negativity(qstate::trusted_density(n, std::move(joint)), anc, sys);
            }
        }
        // Feedback
        for (Component& c : ensemble) {
            c.joint = qstate::apply_gate(c.joint, Gate{GateKind::kCRX, config_.theta_gain}, feedback, ancilla);
        }
    }
    for (const Component& c : ensemble) check_norm(c.joint);
    rec.energy_after = energy();
    rec.work = rec.energy_before - rec.energy_after;

    if (rec.mutual_info < -kInfoTolerance || rec.ancilla_entropy < -kInfoTolerance) {
        throw InvariantViolation(fmt::format("negative information: I = {:.3g}, S(A) = {:.3g}", rec.mutual_info,
                                             rec.ancilla_entropy));
    }
    return {reduced(sys), rec};
}

DemonStepResult demon_step(const Statevector& system, const DemonConfig& config, double tau) {
    return CoherentDemon(config).step(system, tau);
}

DemonStepResult demon_step(const DensityMatrix& system, const DemonConfig& config, double tau) {
    return CoherentDemon(config).step(system, tau);
}

std::string demon_csv_header() {
    return "tau,mutual_info,ancilla_entropy,log_neg,work,energy_before,energy_after,k";
}

std::string demon_csv_row(const DemonStepRecord& r) {
    return fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{}", r.tau, r.mutual_info,
                       r.ancilla_entropy, r.log_neg, r.work, r.energy_before, r.energy_after, r.k);
}

}  // namespace demonlab::protocols
