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

#include "demonlab/experiments/sweep.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "demonlab/common/error.hpp"
#include "demonlab/experiments/worker_pool.hpp"
#include "demonlab/protocols/ansatz.hpp"

namespace demonlab::experiments {

using protocols::CoherentDemon;
using protocols::DemonConfig;
using protocols::DemonStepRecord;

namespace {

constexpr double kLandauerEntropyFloor = 1e-6;
constexpr int kMinScalingN = 3;
constexpr int kMaxScalingN = 8;

RegressionResult fit_work_on_info(std::span<const DemonStepRecord> records) {
    std::vector<double> info;
    std::vector<double> work;
    info.reserve(records.size());
    work.reserve(records.size());
    for (const DemonStepRecord& r : records) {
        info.push_back(r.mutual_info);
        work.push_back(r.work);
    }
    return linear_regression(info, work);
}

double mean(std::span<const double> v) { return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size()); }

double sample_std(std::span<const double> v) {
    if (v.size() < 2) return 0.0;
    const double m = mean(v);
    double ss = 0.0;
    for (double x : v) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

void finish_trials(TrialSweep& t, Pooling pooling) {
    std::vector<DemonStepRecord> all;
    for (const SeedSweep& s : t.seeds) all.insert(all.end(), s.sweep.records.begin(), s.sweep.records.end());
    t.pooled = fit_work_on_info(all);
    if (pooling == Pooling::kPooled) {
        t.eta = t.pooled.slope;
    } else {
        const std::vector<double> etas = t.per_seed_eta();
        t.eta = mean(etas);
    }
}

SeedSweep seed_sweep(int n, int k, double theta_gain, std::uint64_t seed, const SweepConfig& sweep) {
    return {seed, sensing_sweep(trial_config(n, k, theta_gain, seed, sweep), sweep)};
}

}  // namespace

std::string_view to_string(Pooling pooling) { return pooling == Pooling::kPooled ? "pooled" : "per-seed"; }

void SweepConfig::validate() const {
    if (!(tau_min >= 0.0)) throw InvalidArgument(fmt::format("tau_min must be >= 0, got {}", tau_min));
    if (!(tau_max > tau_min)) throw InvalidArgument(fmt::format("tau_max ({}) must exceed tau_min ({})", tau_max, tau_min));
    if (tau_points < 4) throw InvalidArgument(fmt::format("tau_points must be >= 4, got {}", tau_points));
    if (trials < 1) throw InvalidArgument(fmt::format("trials must be >= 1, got {}", trials));
    if (!(theta_gain >= 0.0 && theta_gain <= std::numbers::pi)) {
        throw InvalidArgument(fmt::format("theta_gain must be in [0, pi], got {}", theta_gain));
    }
    if (ansatz_layers < 1) throw InvalidArgument("ansatz_layers must be >= 1");
    if (!std::isfinite(coupling)) throw InvalidArgument("coupling must be finite");
}

std::vector<double> tau_grid(const SweepConfig& sweep) {
    sweep.validate();
    std::vector<double> grid(static_cast<std::size_t>(sweep.tau_points));
    const double step = (sweep.tau_max - sweep.tau_min) / (sweep.tau_points - 1);
    for (int i = 0; i < sweep.tau_points; ++i) grid[i] = sweep.tau_min + step * i;
    grid.back() = sweep.tau_max;
    return grid;
}

SweepResult sensing_sweep(const DemonConfig& config, const SweepConfig& sweep) {
    const CoherentDemon demon(config);
    const qstate::Statevector psi = protocols::prepare_ansatz_state(config.n_system, config.ansatz_layers, config.seed);
    SweepResult out;
    for (double tau : tau_grid(sweep)) out.records.push_back(demon.step(psi, tau).record);
    out.fit = fit_work_on_info(out.records);
    return out;
}

std::vector<double> TrialSweep::per_seed_eta() const {
    std::vector<double> etas;
    etas.reserve(seeds.size());
    for (const SeedSweep& s : seeds) etas.push_back(s.sweep.fit.slope);
    return etas;
}

DemonConfig trial_config(int n, int k, double theta_gain, std::uint64_t seed, const SweepConfig& sweep) {
    DemonConfig c;
    c.n_system = n;
    c.hamiltonian = pauli::build_phase_hamiltonian(sweep.phase, n, seed, sweep.coupling);
    c.theta_gain = theta_gain;
    c.k_ancillae = k;
    c.ansatz_layers = sweep.ansatz_layers;
    c.seed = seed;
    return c;
}

TrialSweep run_trials(int n, int k, double theta_gain, const SweepConfig& sweep) {
    sweep.validate();
    TrialSweep t{n, k, theta_gain, sweep.phase, {}, {}, 0.0};
    t.seeds.resize(static_cast<std::size_t>(sweep.trials));
    parallel_for(t.seeds.size(), sweep.jobs, [&](std::size_t i) {
        t.seeds[i] = seed_sweep(n, k, theta_gain, sweep.seed_for_trial(static_cast<int>(i)), sweep);
    });
    finish_trials(t, sweep.pooling);
    return t;
}

std::vector<std::optional<double>> landauer_ratio(std::span<const DemonStepRecord> records) {
    if (records.empty()) throw InvalidArgument("landauer_ratio needs at least one record");
    std::vector<std::optional<double>> out;
    out.reserve(records.size());
    for (const DemonStepRecord& r : records) {
        if (r.ancilla_entropy < kLandauerEntropyFloor) {
            out.emplace_back();
        } else {
            out.emplace_back(r.mutual_info / r.ancilla_entropy);
        }
    }
    return out;
}

GainSweepResult gain_sweep(int n, pauli::Phase phase, std::span<const double> gains, const SweepConfig& sweep) {
    if (gains.size() < 4) throw InvalidArgument(fmt::format("gain sweep needs >= 4 gains, got {}", gains.size()));
    for (double g : gains) {
        if (!(g > 0.0 && g <= std::numbers::pi / 4)) {
            throw InvalidArgument(fmt::format("gain {} outside (0, pi/4]", g));
        }
    }
    SweepConfig sc = sweep;
    sc.phase = phase;
    sc.validate();

    const std::size_t trials = static_cast<std::size_t>(sc.trials);
    std::vector<TrialSweep> per_gain(gains.size());
    for (std::size_t g = 0; g < gains.size(); ++g) {
        per_gain[g] = TrialSweep{n, 1, gains[g], phase, std::vector<SeedSweep>(trials), {}, 0.0};
    }
    parallel_for(gains.size() * trials, sc.jobs, [&](std::size_t item) {
        const std::size_t g = item / trials;
        const std::size_t t = item % trials;
        per_gain[g].seeds[t] = seed_sweep(n, 1, gains[g], sc.seed_for_trial(static_cast<int>(t)), sc);
    });

    GainSweepResult out;
    std::vector<double> etas;
    for (TrialSweep& tr : per_gain) {
        finish_trials(tr, sc.pooling);
        out.points.push_back({tr.theta_gain, tr.eta, tr.pooled.r_squared});
        etas.push_back(tr.eta);
    }
    out.fit = linear_regression(gains, etas);
    return out;
}

ScalingResult scaling_experiment(const SweepConfig& sweep) {
    sweep.validate();
    if (sweep.n_range.empty()) throw InvalidArgument("n_range is empty");
    for (int n : sweep.n_range) {
        if (n < kMinScalingN || n > kMaxScalingN) {
            throw InvalidArgument(fmt::format("system size {} outside [{}, {}]", n, kMinScalingN, kMaxScalingN));
        }
    }
    std::vector<int> sizes = sweep.n_range;
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

    const std::size_t trials = static_cast<std::size_t>(sweep.trials);
    std::vector<double> slopes(sizes.size() * trials);
    // Largest systems first so the pool drains evenly.
    parallel_for(slopes.size(), sweep.jobs, [&](std::size_t item) {
        const std::size_t slot = slopes.size() - 1 - item;
        const int n = sizes[slot / trials];
        const auto t = static_cast<int>(slot % trials);
        slopes[slot] = seed_sweep(n, 1, sweep.theta_gain, sweep.seed_for_trial(t), sweep).sweep.fit.slope;
    });

    ScalingResult out;
    const std::vector<double> grid = tau_grid(sweep);
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        ScalingRecord r;
        r.n = sizes[i];
        r.phase = sweep.phase;
        r.tau_grid = grid;
        r.seed_eta.assign(slopes.begin() + static_cast<std::ptrdiff_t>(i * trials),
                          slopes.begin() + static_cast<std::ptrdiff_t>((i + 1) * trials));
        for (int t = 0; t < sweep.trials; ++t) r.seeds.push_back(sweep.seed_for_trial(t));
        r.eta_mean = mean(r.seed_eta);
        r.eta_std = sample_std(r.seed_eta);
        out.records.push_back(std::move(r));
    }
    if (out.records.size() >= 2) out.chi = complexity_specific_heat(out.records);
    if (sweep.phase == pauli::Phase::kChaotic) out.n_c = critical_size(out.records);
    return out;
}

std::optional<double> critical_size(std::span<const ScalingRecord> records) {
    for (std::size_t i = 1; i < records.size(); ++i) {
        const ScalingRecord& a = records[i - 1];
        const ScalingRecord& b = records[i];
        if (a.eta_mean > 0.0 && b.eta_mean <= 0.0) {
            return a.n + a.eta_mean * (b.n - a.n) / (a.eta_mean - b.eta_mean);
        }
    }
    return std::nullopt;
}

std::vector<ChiPoint> complexity_specific_heat(std::span<const ScalingRecord> records) {
    if (records.size() < 2) throw InvalidArgument("complexity specific heat needs >= 2 sizes");
    for (std::size_t i = 1; i < records.size(); ++i) {
        if (records[i].n <= records[i - 1].n) throw InvalidArgument("scaling records must be sorted by strictly increasing N");
    }
    std::vector<ChiPoint> out;
    const std::size_t last = records.size() - 1;
    for (std::size_t i = 0; i <= last; ++i) {
        const std::size_t lo = i == 0 ? 0 : i - 1;
        const std::size_t hi = i == last ? last : i + 1;
        const double chi = (records[hi].eta_mean - records[lo].eta_mean) / (records[hi].n - records[lo].n);
        out.push_back({records[i].n, chi});
    }
    return out;
}

std::vector<MultiAncillaRow> multi_ancilla_comparison(std::span<const int> n_range, std::span<const int> ks,
                                                      const SweepConfig& sweep, double fixed_tau) {
    sweep.validate();
    if (n_range.empty() || ks.empty()) throw InvalidArgument("multi-ancilla comparison needs sizes and ancilla counts");
    for (int k : ks) {
        if (k < 1 || k > 3) throw InvalidArgument(fmt::format("ancilla count {} outside {{1, 2, 3}}", k));
    }
    if (!(fixed_tau >= 0.0)) throw InvalidArgument(fmt::format("fixed tau must be >= 0, got {}", fixed_tau));

    struct Cell {
        double slope = 0.0;
        double info = 0.0;
    };
    const std::size_t trials = static_cast<std::size_t>(sweep.trials);
    const std::size_t pairs = n_range.size() * ks.size();
    std::vector<Cell> cells(pairs * trials);
    parallel_for(cells.size(), sweep.jobs, [&](std::size_t item) {
        const std::size_t slot = cells.size() - 1 - item;
        const std::size_t pair = slot / trials;
        const int n = n_range[pair / ks.size()];
        const int k = ks[pair % ks.size()];
        const std::uint64_t seed = sweep.seed_for_trial(static_cast<int>(slot % trials));
        const DemonConfig config = trial_config(n, k, sweep.theta_gain, seed, sweep);
        cells[slot].slope = sensing_sweep(config, sweep).fit.slope;
        const qstate::Statevector psi = protocols::prepare_ansatz_state(n, config.ansatz_layers, seed);
        cells[slot].info = CoherentDemon(config).step(psi, fixed_tau).record.mutual_info;
    });

    std::vector<MultiAncillaRow> rows;
    for (std::size_t pair = 0; pair < pairs; ++pair) {
        MultiAncillaRow row;
        row.n = n_range[pair / ks.size()];
        row.k = ks[pair % ks.size()];
        for (std::size_t t = 0; t < trials; ++t) {
            row.eta += cells[pair * trials + t].slope;
            row.i_mean += cells[pair * trials + t].info;
        }
        row.eta /= static_cast<double>(trials);
        row.i_mean /= static_cast<double>(trials);
        row.work = row.eta * row.i_mean;
        rows.push_back(row);
    }
    return rows;
}

std::optional<double> bandwidth_ratio(std::span<const MultiAncillaRow> rows, int num, int den) {
    double sum = 0.0;
    int count = 0;
    for (const MultiAncillaRow& a : rows) {
        if (a.k != num) continue;
        for (const MultiAncillaRow& b : rows) {
            if (b.k == den && b.n == a.n && b.i_mean > 0.0) {
                sum += a.i_mean / b.i_mean;
                ++count;
            }
        }
    }
    if (count == 0) return std::nullopt;
    return sum / count;
}

std::optional<int> max_positive_work_n(std::span<const MultiAncillaRow> rows, int k) {
    std::optional<int> best;
    for (const MultiAncillaRow& r : rows) {
        if (r.k == k && r.work > 0.0 && (!best || r.n > *best)) best = r.n;
    }
    return best;
}

}  // namespace demonlab::experiments
