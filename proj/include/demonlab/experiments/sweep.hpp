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

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "demonlab/experiments/regression.hpp"
#include "demonlab/pauli/hamiltonians.hpp"
#include "demonlab/protocols/demon.hpp"

namespace demonlab::experiments {

/// How a multi-seed sweep turns into one efficiency value.
enum class Pooling {
    kPooled,   // one OLS over every (seed, tau) point
    kPerSeed,  // mean of the per-seed slopes
};

std::string_view to_string(Pooling pooling);

struct SweepConfig {
    double tau_min = 0.0;
    double tau_max = 1.5;
    int tau_points = 16;
    double theta_gain = 0.2;  // radians
    int trials = 5;
    std::vector<int> n_range{3, 4, 5, 6, 7, 8};
    pauli::Phase phase = pauli::Phase::kOrdered;
    std::uint64_t base_seed = 0;
    int ansatz_layers = 1;
    double coupling = 1.0;  // J of the ordered-phase Hamiltonian
    int jobs = 1;           // <= 0 means all hardware threads
    Pooling pooling = Pooling::kPooled;

    void validate() const;
    /// Trial t uses this seed for both the Hamiltonian fields and the ansatz angles.
    std::uint64_t seed_for_trial(int t) const { return base_seed + static_cast<std::uint64_t>(t); }
};

/// tau_points equally spaced times on [tau_min, tau_max], both ends included.
std::vector<double> tau_grid(const SweepConfig& sweep);

struct SweepResult {
    std::vector<protocols::DemonStepRecord> records;
    RegressionResult fit;  // work on mutual_info; slope is eta
};

/// Fresh ansatz state (seeded by config.seed) for every tau of the grid,
/// one demon cycle each, then OLS of work on mutual information.
SweepResult sensing_sweep(const protocols::DemonConfig& config, const SweepConfig& sweep);

struct SeedSweep {
    std::uint64_t seed = 0;
    SweepResult sweep;
};

/// One system size, ancilla count and gain, repeated over sweep.trials seeds.
struct TrialSweep {
    int n = 0;
    int k = 1;
    double theta_gain = 0.0;
    pauli::Phase phase = pauli::Phase::kOrdered;
    std::vector<SeedSweep> seeds;
    RegressionResult pooled;  // over every record of every seed
    double eta = 0.0;         // pooled slope or per-seed mean, per sweep.pooling

    std::vector<double> per_seed_eta() const;
};

/// Demon configuration for one trial: phase Hamiltonian and ansatz both
/// seeded with `seed`.
protocols::DemonConfig trial_config(int n, int k, double theta_gain, std::uint64_t seed, const SweepConfig& sweep);

TrialSweep run_trials(int n, int k, double theta_gain, const SweepConfig& sweep);

/// I / S(A) per record; records with S(A) < 1e-6 map to nullopt.
std::vector<std::optional<double>> landauer_ratio(std::span<const protocols::DemonStepRecord> records);

struct GainPoint {
    double theta_gain = 0.0;
    double eta = 0.0;
    double r_squared = 0.0;
};

struct GainSweepResult {
    std::vector<GainPoint> points;
    RegressionResult fit;  // eta on theta_gain
};

/// Gains must lie in (0, pi/4] with at least four values.
GainSweepResult gain_sweep(int n, pauli::Phase phase, std::span<const double> gains, const SweepConfig& sweep);

struct ScalingRecord {
    int n = 0;
    double eta_mean = 0.0;
    double eta_std = 0.0;  // sample standard deviation; 0 for a single trial
    std::vector<std::uint64_t> seeds;
    std::vector<double> seed_eta;
    pauli::Phase phase = pauli::Phase::kOrdered;
    std::vector<double> tau_grid;
};

struct ChiPoint {
    int n = 0;
    double chi = 0.0;
};

struct ScalingResult {
    std::vector<ScalingRecord> records;
    std::vector<ChiPoint> chi;     // empty for a single size
    std::optional<double> n_c;  // chaotic phase only
};

/// eta(N) per seed over sweep.n_range (sizes in [3, 8]); eta_mean is the
/// mean of per-seed slopes.
ScalingResult scaling_experiment(const SweepConfig& sweep);

/// First crossing from eta_mean > 0 to eta_mean <= 0, linearly interpolated.
std::optional<double> critical_size(std::span<const ScalingRecord> records);

/// d eta_mean / dN by central differences, one-sided at the ends.
std::vector<ChiPoint> complexity_specific_heat(std::span<const ScalingRecord> records);

struct MultiAncillaRow {
    int n = 0;
    int k = 1;
    double i_mean = 0.0;  // mean I(S:A) per cycle at the fixed tau
    double eta = 0.0;     // mean per-seed slope over the tau grid
    double work = 0.0;    // eta * i_mean
};

inline constexpr double kDefaultFixedTau = 0.5;

/// ks must be a subset of {1, 2, 3}.
std::vector<MultiAncillaRow> multi_ancilla_comparison(std::span<const int> n_range, std::span<const int> ks,
                                                      const SweepConfig& sweep, double fixed_tau = kDefaultFixedTau);

/// Mean over N of I(k = num) / I(k = den); nullopt when no N has both rows.
std::optional<double> bandwidth_ratio(std::span<const MultiAncillaRow> rows, int num = 2, int den = 1);

/// Largest N whose row for k has work > 0.
std::optional<int> max_positive_work_n(std::span<const MultiAncillaRow> rows, int k);

}  // namespace demonlab::experiments
