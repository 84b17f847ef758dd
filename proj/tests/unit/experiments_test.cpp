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

#include <algorithm>
#include <atomic>
#include <random>

#include "demonlab/common/error.hpp"
#include "demonlab/experiments/regression.hpp"
#include "demonlab/experiments/report.hpp"
#include "demonlab/experiments/sweep.hpp"
#include "demonlab/experiments/worker_pool.hpp"

namespace demonlab::experiments {
namespace {

SweepConfig small_sweep() {
    SweepConfig s;
    s.tau_points = 6;
    s.trials = 2;
    s.n_range = {3, 4};
    return s;
}

ScalingRecord record(int n, double eta) {
    ScalingRecord r;
    r.n = n;
    r.eta_mean = eta;
    return r;
}

TEST(Regression, ExactLine) {
    const std::vector<double> x{0, 1, 2, 3, 4};
    const std::vector<double> y{1, 3, 5, 7, 9};
    const RegressionResult r = linear_regression(x, y);
    EXPECT_NEAR(r.slope, 2.0, 1e-12);
    EXPECT_NEAR(r.intercept, 1.0, 1e-12);
    EXPECT_NEAR(r.r_squared, 1.0, 1e-12);
    EXPECT_EQ(r.n_points, 5u);
}

TEST(Regression, ConstantYConvention) {
    const std::vector<double> x{0, 1, 2};
    const std::vector<double> y{4, 4, 4};
    const RegressionResult r = linear_regression(x, y);
    EXPECT_EQ(r.slope, 0.0);
    EXPECT_EQ(r.r_squared, 0.0);
    EXPECT_DOUBLE_EQ(r.intercept, 4.0);
}

TEST(Regression, ThreePointHandOracle) {
    const std::vector<double> x{0, 1, 2};
    const std::vector<double> y{0, 1, 3};
    const RegressionResult r = linear_regression(x, y);
    EXPECT_NEAR(r.slope, 1.5, 1e-12);
    EXPECT_NEAR(r.intercept, -1.0 / 6.0, 1e-12);
    EXPECT_NEAR(r.r_squared, 27.0 / 28.0, 1e-12);
}

TEST(Regression, DegenerateInputsThrow) {
    const std::vector<double> same{1, 1, 1};
    const std::vector<double> y{0, 1, 2};
    EXPECT_THROW(linear_regression(same, y), RegressionError);
    EXPECT_THROW(linear_regression(std::vector<double>{1}, std::vector<double>{1}), RegressionError);
    EXPECT_THROW(linear_regression(y, std::vector<double>{1, 2}), RegressionError);
}

TEST(Regression, AffineDataAtScaleGivesUnitRSquared) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-50, 50);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> x(20);
        std::vector<double> y(20);
        const double a = u(rng);
        const double b = u(rng);
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = u(rng);
            y[i] = a * x[i] + b;
        }
        EXPECT_NEAR(linear_regression(x, y).r_squared, 1.0, 1e-12);
    }
}

TEST(Regression, RSquaredInUnitIntervalAndPermutationInvariant) {
    std::mt19937_64 rng(4);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::pair<double, double>> pts(12);
        for (auto& p : pts) p = {g(rng), g(rng)};
        auto fit = [&] {
            std::vector<double> x;
            std::vector<double> y;
            for (const auto& [a, b] : pts) {
                x.push_back(a);
                y.push_back(b);
            }
            return linear_regression(x, y);
        };
        const RegressionResult before = fit();
        EXPECT_GE(before.r_squared, 0.0);
        EXPECT_LE(before.r_squared, 1.0);
        std::shuffle(pts.begin(), pts.end(), rng);
        const RegressionResult after = fit();
        EXPECT_NEAR(before.slope, after.slope, 1e-12);
        EXPECT_NEAR(before.r_squared, after.r_squared, 1e-12);
    }
}

TEST(Regression, PearsonKnownCases) {
    const std::vector<double> x{1, 2, 3, 4};
    EXPECT_NEAR(pearson_correlation(x, std::vector<double>{2, 4, 6, 8}), 1.0, 1e-12);
    EXPECT_NEAR(pearson_correlation(x, std::vector<double>{8, 6, 4, 2}), -1.0, 1e-12);
    EXPECT_EQ(pearson_correlation(x, std::vector<double>{1, 1, 1, 1}), 0.0);
}

TEST(TauGrid, EndpointsAndSpacing) {
    const auto grid = tau_grid(SweepConfig{});
    ASSERT_EQ(grid.size(), 16u);
    EXPECT_EQ(grid.front(), 0.0);
    EXPECT_EQ(grid.back(), 1.5);
    EXPECT_NEAR(grid[1], 0.1, 1e-15);
    SweepConfig bad;
    bad.tau_points = 3;
    EXPECT_THROW(tau_grid(bad), InvalidArgument);
    bad = SweepConfig{};
    bad.tau_max = 0.0;
    EXPECT_THROW(tau_grid(bad), InvalidArgument);
}

TEST(SensingSweep, RecordsFollowGrid) {
    const SweepConfig s = small_sweep();
    const SweepResult r = sensing_sweep(trial_config(3, 1, 0.2, 0, s), s);
    ASSERT_EQ(r.records.size(), 6u);
    EXPECT_LE(r.records.front().mutual_info, 1e-9);
    EXPECT_EQ(r.fit.n_points, 6u);
}

TEST(SensingSweep, ZeroGainGivesZeroEfficiency) {
    const SweepConfig s = small_sweep();
    const SweepResult r = sensing_sweep(trial_config(3, 1, 0.0, 1, s), s);
    for (const auto& rec : r.records) EXPECT_EQ(rec.work, 0.0);
    EXPECT_EQ(r.fit.slope, 0.0);
    EXPECT_EQ(r.fit.r_squared, 0.0);
}

TEST(SensingSweep, EfficiencyIgnoresGridOrder) {
    SweepConfig s = small_sweep();
    const SweepResult r = sensing_sweep(trial_config(3, 1, 0.2, 2, s), s);
    std::vector<protocols::DemonStepRecord> reversed(r.records.rbegin(), r.records.rend());
    std::vector<double> x;
    std::vector<double> y;
    for (const auto& rec : reversed) {
        x.push_back(rec.mutual_info);
        y.push_back(rec.work);
    }
    EXPECT_NEAR(linear_regression(x, y).slope, r.fit.slope, 1e-12);
}

TEST(Trials, SeedScheduleAndPooling) {
    SweepConfig s = small_sweep();
    s.base_seed = 40;
    const TrialSweep pooled = run_trials(3, 1, 0.2, s);
    ASSERT_EQ(pooled.seeds.size(), 2u);
    EXPECT_EQ(pooled.seeds[0].seed, 40u);
    EXPECT_EQ(pooled.seeds[1].seed, 41u);
    EXPECT_EQ(pooled.eta, pooled.pooled.slope);
    EXPECT_EQ(pooled.pooled.n_points, 12u);
    s.pooling = Pooling::kPerSeed;
    const TrialSweep per_seed = run_trials(3, 1, 0.2, s);
    const auto etas = per_seed.per_seed_eta();
    EXPECT_DOUBLE_EQ(per_seed.eta, (etas[0] + etas[1]) / 2);
}

TEST(Trials, WorkerCountDoesNotChangeResults) {
    SweepConfig s = small_sweep();
    s.trials = 4;
    s.jobs = 1;
    const std::string serial = sweep_csv(run_trials(4, 1, 0.2, s));
    s.jobs = 4;
    EXPECT_EQ(sweep_csv(run_trials(4, 1, 0.2, s)), serial);
}

TEST(Landauer, RatiosAndAbsentEntries) {
    protocols::DemonStepRecord zero;
    protocols::DemonStepRecord pure;
    pure.mutual_info = 0.6;
    pure.ancilla_entropy = 0.3;
    protocols::DemonStepRecord classical;
    classical.mutual_info = 1.0;
    classical.ancilla_entropy = 1.0;
    const std::vector<protocols::DemonStepRecord> recs{zero, pure, classical};
    const auto ratios = landauer_ratio(recs);
    EXPECT_FALSE(ratios[0].has_value());
    EXPECT_DOUBLE_EQ(*ratios[1], 2.0);
    EXPECT_LE(*ratios[2], 1.0 + 1e-9);
    EXPECT_THROW(landauer_ratio(std::vector<protocols::DemonStepRecord>{}), InvalidArgument);
}

TEST(Landauer, SweepRecordsArePureRatioTwo) {
    const SweepConfig s = small_sweep();
    const SweepResult r = sensing_sweep(trial_config(4, 1, 0.2, 3, s), s);
    for (const auto& ratio : landauer_ratio(r.records)) {
        if (ratio) EXPECT_NEAR(*ratio, 2.0, 1e-6);
    }
}

TEST(Gain, ValidatesGains) {
    const SweepConfig s = small_sweep();
    EXPECT_THROW(gain_sweep(3, pauli::Phase::kOrdered, std::vector<double>{0.1, 0.2, 0.3}, s), InvalidArgument);
    EXPECT_THROW(gain_sweep(3, pauli::Phase::kOrdered, std::vector<double>{0.0, 0.1, 0.2, 0.3}, s), InvalidArgument);
    EXPECT_THROW(gain_sweep(3, pauli::Phase::kOrdered, std::vector<double>{0.1, 0.2, 0.3, 1.0}, s), InvalidArgument);
}

TEST(Gain, OnePointPerGain) {
    SweepConfig s = small_sweep();
    s.trials = 1;
    const std::vector<double> gains{0.1, 0.2, 0.3, 0.4};
    const GainSweepResult g = gain_sweep(3, pauli::Phase::kOrdered, gains, s);
    ASSERT_EQ(g.points.size(), 4u);
    for (std::size_t i = 0; i < gains.size(); ++i) EXPECT_EQ(g.points[i].theta_gain, gains[i]);
    EXPECT_EQ(g.fit.n_points, 4u);
}

TEST(Scaling, SingleTrialHasZeroSpread) {
    SweepConfig s = small_sweep();
    s.trials = 1;
    const ScalingResult r = scaling_experiment(s);
    ASSERT_EQ(r.records.size(), 2u);
    for (const auto& rec : r.records) {
        EXPECT_EQ(rec.eta_std, 0.0);
        EXPECT_EQ(rec.seeds.size(), 1u);
        EXPECT_EQ(rec.tau_grid.size(), 6u);
    }
}

TEST(Scaling, MeanIsMeanOfSeedSlopes) {
    const SweepConfig s = small_sweep();
    const ScalingResult r = scaling_experiment(s);
    const TrialSweep direct = run_trials(4, 1, s.theta_gain, s);
    const auto etas = direct.per_seed_eta();
    EXPECT_DOUBLE_EQ(r.records[1].eta_mean, (etas[0] + etas[1]) / 2);
    EXPECT_NEAR(r.records[1].eta_std, std::abs(etas[0] - etas[1]) / std::sqrt(2.0), 1e-15);
}

TEST(Scaling, RejectsSizesOutsideRange) {
    SweepConfig s = small_sweep();
    s.n_range = {2, 3};
    EXPECT_THROW(scaling_experiment(s), InvalidArgument);
}

TEST(Scaling, OrderedPhaseHasNoCriticalSize) {
    SweepConfig s = small_sweep();
    s.n_range = {3};
    const ScalingResult r = scaling_experiment(s);
    EXPECT_FALSE(r.n_c.has_value());
    EXPECT_TRUE(r.chi.empty());
}

TEST(CriticalSize, LinearInterpolation) {
    const std::vector<ScalingRecord> recs{record(3, 0.4), record(4, 0.1), record(5, -0.2), record(6, 0.3)};
    ASSERT_TRUE(critical_size(recs).has_value());
    EXPECT_NEAR(*critical_size(recs), 4.0 + 0.1 / 0.3, 1e-12);
    const std::vector<ScalingRecord> positive{record(3, 0.4), record(4, 0.1)};
    EXPECT_FALSE(critical_size(positive).has_value());
    const std::vector<ScalingRecord> single{record(5, 0.1)};
    EXPECT_FALSE(critical_size(single).has_value());
}

TEST(SpecificHeat, LinearEtaGivesConstantChi) {
    std::vector<ScalingRecord> recs;
    for (int n = 3; n <= 8; ++n) recs.push_back(record(n, 0.25 * n - 1.0));
    for (const ChiPoint& p : complexity_specific_heat(recs)) EXPECT_NEAR(p.chi, 0.25, 1e-12);
}

TEST(SpecificHeat, CentralAndOneSidedDifferences) {
    const std::vector<ScalingRecord> recs{record(3, 0.0), record(4, 1.0), record(5, 4.0)};
    const auto chi = complexity_specific_heat(recs);
    ASSERT_EQ(chi.size(), 3u);
    EXPECT_DOUBLE_EQ(chi[0].chi, 1.0);
    EXPECT_DOUBLE_EQ(chi[1].chi, 2.0);
    EXPECT_DOUBLE_EQ(chi[2].chi, 3.0);
    EXPECT_THROW(complexity_specific_heat(std::vector<ScalingRecord>{record(3, 0.0)}), InvalidArgument);
    EXPECT_THROW(complexity_specific_heat(std::vector<ScalingRecord>{record(4, 0.0), record(3, 1.0)}), InvalidArgument);
}

TEST(MultiAncilla, SingleAncillaReproducesScaling) {
    const SweepConfig s = small_sweep();
    const std::vector<int> sizes{3, 4};
    const std::vector<int> ks{1, 2};
    const auto rows = multi_ancilla_comparison(sizes, ks, s);
    ASSERT_EQ(rows.size(), 4u);
    const ScalingResult scaling = scaling_experiment(s);
    for (const auto& row : rows) {
        EXPECT_NEAR(row.work, row.eta * row.i_mean, 1e-15);
        if (row.k != 1) continue;
        const auto it = std::find_if(scaling.records.begin(), scaling.records.end(),
                                     [&](const ScalingRecord& r) { return r.n == row.n; });
        EXPECT_DOUBLE_EQ(row.eta, it->eta_mean);
    }
    EXPECT_TRUE(bandwidth_ratio(rows, 2, 1).has_value());
}

TEST(MultiAncilla, RejectsUnsupportedAncillaCounts) {
    const std::vector<int> sizes{3};
    const std::vector<int> ks{4};
    EXPECT_THROW(multi_ancilla_comparison(sizes, ks, small_sweep()), InvalidArgument);
}

TEST(MultiAncilla, SummaryHelpers) {
    const std::vector<MultiAncillaRow> rows{{3, 1, 0.5, 0.1, 0.05}, {3, 2, 1.0, 0.1, 0.1}, {4, 1, 0.4, -0.1, -0.04},
                                            {4, 2, 0.8, 0.05, 0.04}};
    EXPECT_DOUBLE_EQ(*bandwidth_ratio(rows, 2, 1), 2.0);
    EXPECT_EQ(max_positive_work_n(rows, 1), 3);
    EXPECT_EQ(max_positive_work_n(rows, 2), 4);
    EXPECT_FALSE(max_positive_work_n(rows, 3).has_value());
}

TEST(Reports, HeadersAndRowCounts) {
    SweepConfig s = small_sweep();
    s.trials = 1;
    const std::string sweep = sweep_csv(run_trials(3, 1, 0.2, s));
    EXPECT_EQ(sweep.substr(0, sweep.find('\n')),
              "tau,mutual_info,ancilla_entropy,log_neg,work,energy_before,energy_after,k,seed,N,phase");
    EXPECT_EQ(std::count(sweep.begin(), sweep.end(), '\n'), 7);
    const std::string scaling = scaling_csv(scaling_experiment(s));
    EXPECT_EQ(scaling.substr(0, scaling.find('\n')), "N,phase,eta_mean,eta_std,eta_over_N2,chi");
    EXPECT_EQ(gain_csv(GainSweepResult{}), "theta_gain,eta,r2\n");
    EXPECT_EQ(multik_csv(std::vector<MultiAncillaRow>{}), "N,k,I_mean,eta,W\n");
}

TEST(WorkerPool, VisitsEverySlotOnceAndRethrows) {
    std::vector<std::atomic<int>> hits(100);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
    for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
    EXPECT_THROW(parallel_for(10, 3,
                              [](std::size_t i) {
                                  if (i == 5) throw InvalidArgument("boom");
                              }),
                 InvalidArgument);
}

}  // namespace
}  // namespace demonlab::experiments
