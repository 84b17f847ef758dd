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

#include "demonlab/cli/run.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>

#include "demonlab/common/error.hpp"
#include "demonlab/experiments/report.hpp"
#include "demonlab/experiments/sweep.hpp"
#include "demonlab/pauli/hamiltonians.hpp"
#include "demonlab/pauli/lie_closure.hpp"
#include "demonlab/protocols/interference.hpp"

namespace demonlab::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr double kSeparableTolerance = 1e-9;
constexpr double kInteractingTarget = 1.74;
constexpr double kInteractingTolerance = 0.01;
constexpr double kProbeTime = 1.0;
constexpr double kPureRatio = 2.0;

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt::format("{:.4g}", *v) : "none"; }

ordered_json json_opt(const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

ordered_json base_summary(const RunConfig& c) {
    ordered_json s;
    s["subcommand"] = to_string(c.subcommand);
    s["eta"] = nullptr;
    s["r_squared"] = nullptr;
    s["N_c"] = nullptr;
    s["slope_gain"] = nullptr;
    s["ratio_k2_k1"] = nullptr;
    const experiments::SweepConfig sweep = c.sweep();
    ordered_json seeds = ordered_json::array();
    for (int t = 0; t < sweep.trials; ++t) seeds.push_back(sweep.seed_for_trial(t));
    s["seeds"] = seeds;
    return s;
}

RunOutput run_nonlinearity(const RunConfig& c) {
    using protocols::Interaction;
    RunOutput out;
    std::string csv = "t,separable,interacting\n";
    for (double t : experiments::tau_grid(c.sweep())) {
        fmt::format_to(std::back_inserter(csv), "{:.17g},{:.17g},{:.17g}\n", t,
                       protocols::nonlinearity_test(Interaction::kSeparable, t),
                       protocols::nonlinearity_test(Interaction::kInteracting, t));
    }
    const double sep = protocols::nonlinearity_test(Interaction::kSeparable, kProbeTime);
    const double inter = protocols::nonlinearity_test(Interaction::kInteracting, kProbeTime);
    const bool sep_ok = std::abs(sep) <= kSeparableTolerance;
    const bool inter_ok = std::abs(inter - kInteractingTarget) <= kInteractingTolerance;

    out.files.emplace_back("nonlinearity.csv", std::move(csv));
    out.summary = base_summary(c);
    out.summary["seeds"] = ordered_json::array();
    out.summary["results"] = {{"t", kProbeTime},
                              {"separable_bits", sep},
                              {"separable_pass", sep_ok},
                              {"interacting_bits", inter},
                              {"interacting_target", kInteractingTarget},
                              {"interacting_pass", inter_ok}};
    out.line = fmt::format("nonlinearity t={}: separable I={:.3g} bits [{}], interacting I={:.4f} bits [{}]",
                           kProbeTime, sep, sep_ok ? "PASS" : "FAIL", inter, inter_ok ? "PASS" : "FAIL");
    return out;
}

RunOutput run_demon(const RunConfig& c) {
    const experiments::SweepConfig sweep = c.sweep();
    const experiments::TrialSweep trials = experiments::run_trials(c.n, c.k, c.theta_gain, sweep);

    std::vector<protocols::DemonStepRecord> all;
    for (const auto& s : trials.seeds) all.insert(all.end(), s.sweep.records.begin(), s.sweep.records.end());
    double ratio_dev = 0.0;
    int bound_violations = 0;
    std::vector<double> log_neg;
    std::vector<double> work;
    const auto ratios = experiments::landauer_ratio(all);
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (ratios[i]) ratio_dev = std::max(ratio_dev, std::abs(*ratios[i] - kPureRatio));
        if (all[i].work >= std::numbers::ln2 * all[i].ancilla_entropy && all[i].ancilla_entropy > 0.0) ++bound_violations;
        log_neg.push_back(all[i].log_neg);
        work.push_back(all[i].work);
    }

    RunOutput out;
    out.files.emplace_back("sweep.csv", experiments::sweep_csv(trials));
    out.summary = base_summary(c);
    out.summary["eta"] = trials.eta;
    out.summary["r_squared"] = trials.pooled.r_squared;
    ordered_json per_seed = ordered_json::array();
    for (const auto& s : trials.seeds) {
        per_seed.push_back({{"seed", s.seed}, {"eta", s.sweep.fit.slope}, {"r_squared", s.sweep.fit.r_squared}});
    }
    out.summary["results"] = {{"pooled_slope", trials.pooled.slope},
                              {"pooled_intercept", trials.pooled.intercept},
                              {"per_seed", per_seed},
                              {"landauer_ratio_max_deviation", ratio_dev},
                              {"landauer_bound_violations", bound_violations},
                              {"log_neg_work_correlation", experiments::pearson_correlation(log_neg, work)}};
    out.line = fmt::format("demon N={} {} k={} theta_gain={}: eta={:.4g} R2={:.3f} ({} seeds x {} tau)", c.n,
                           pauli::to_string(c.phase), c.k, c.theta_gain, trials.eta, trials.pooled.r_squared,
                           c.trials, c.tau_points);
    return out;
}

RunOutput run_scaling(const RunConfig& c) {
    const experiments::ScalingResult scaling = experiments::scaling_experiment(c.sweep());
    RunOutput out;
    out.files.emplace_back("scaling.csv", experiments::scaling_csv(scaling));
    out.summary = base_summary(c);
    out.summary["N_c"] = json_opt(scaling.n_c);
    ordered_json rows = ordered_json::array();
    std::string etas;
    for (const auto& r : scaling.records) {
        rows.push_back({{"N", r.n}, {"eta_mean", r.eta_mean}, {"eta_std", r.eta_std}, {"seed_eta", r.seed_eta}});
        etas += fmt::format("{}{:.3g}", etas.empty() ? "" : " ", r.eta_mean);
    }
    out.summary["results"] = {{"records", rows}};
    out.line = fmt::format("scaling {} N={}..{}: eta_mean=[{}] N_c={}", pauli::to_string(c.phase), c.n_min, c.n_max,
                           etas, fmt_opt(scaling.n_c));
    return out;
}

RunOutput run_gain(const RunConfig& c) {
    std::vector<double> gains;
    for (int i = 1; i <= 8; ++i) gains.push_back(0.05 * i);
    const experiments::GainSweepResult gain = experiments::gain_sweep(c.n, c.phase, gains, c.sweep());
    RunOutput out;
    out.files.emplace_back("gain.csv", experiments::gain_csv(gain));
    out.summary = base_summary(c);
    out.summary["r_squared"] = gain.fit.r_squared;
    out.summary["slope_gain"] = gain.fit.slope;
    out.summary["results"] = {{"intercept", gain.fit.intercept}};
    out.line = fmt::format("gain N={} {}: d eta / d theta_gain={:.4g} R2={:.3f}", c.n, pauli::to_string(c.phase),
                           gain.fit.slope, gain.fit.r_squared);
    return out;
}

RunOutput run_multik(const RunConfig& c) {
    std::vector<int> sizes;
    for (int m = c.n_min; m <= c.n_max; ++m) sizes.push_back(m);
    std::vector<int> ks;
    for (int k = 1; k <= std::max(c.k, 2); ++k) ks.push_back(k);
    const auto rows = experiments::multi_ancilla_comparison(sizes, ks, c.sweep(), c.fixed_tau);
    const auto ratio = experiments::bandwidth_ratio(rows, 2, 1);

    RunOutput out;
    out.files.emplace_back("multik.csv", experiments::multik_csv(rows));
    out.summary = base_summary(c);
    out.summary["ratio_k2_k1"] = json_opt(ratio);
    ordered_json max_n;
    std::string reach;
    for (int k : ks) {
        const auto m = experiments::max_positive_work_n(rows, k);
        max_n[std::to_string(k)] = m ? ordered_json(*m) : ordered_json(nullptr);
        reach += fmt::format(" k={}:{}", k, m ? std::to_string(*m) : "none");
    }
    out.summary["results"] = {{"fixed_tau", c.fixed_tau}, {"max_positive_work_n", max_n}};
    out.line = fmt::format("multik {} N={}..{}: I(k=2)/I(k=1)={} max N with W>0:{}", pauli::to_string(c.phase),
                           c.n_min, c.n_max, fmt_opt(ratio), reach);
    return out;
}

RunOutput run_algebra(const RunConfig& c) {
    const pauli::PauliSum h = pauli::build_phase_hamiltonian(c.phase, c.n, c.base_seed, c.coupling);
    const std::vector<pauli::PauliSum> gens = pauli::dla_sum_generators(h);
    const pauli::AlgebraBasis basis = pauli::lie_closure_span(gens);
    const pauli::WeightProfile profile = pauli::algebra_weight_profile(basis);

    RunOutput out;
    out.summary = base_summary(c);
    out.summary["seeds"] = ordered_json::array({c.base_seed});
    out.summary["results"] = pauli::to_json(basis);
    if (c.subcommand == Subcommand::kDla) {
        out.files.emplace_back("dla.csv", fmt::format("N,phase,dim,truncated,mean_weight\n{},{},{},{},{:.17g}\n", c.n,
                                                      pauli::to_string(c.phase), basis.dim(), basis.truncated ? 1 : 0,
                                                      profile.mean_weight));
        out.line = fmt::format("dla {} N={}: dim={} truncated={}", pauli::to_string(c.phase), c.n, basis.dim(),
                               basis.truncated ? "true" : "false");
    } else {
        std::string csv = "weight,mass,fraction\n";
        const double total = profile.total();
        for (const auto& [w, m] : profile.mass) {
            fmt::format_to(std::back_inserter(csv), "{},{:.17g},{:.17g}\n", w, m, m / total);
        }
        out.files.emplace_back("weights.csv", std::move(csv));
        out.line = fmt::format("weights {} N={}: dim={} mean Pauli weight={:.4f}", pauli::to_string(c.phase), c.n,
                               basis.dim(), profile.mean_weight);
    }
    return out;
}

}  // namespace

RunOutput execute(const RunConfig& config) {
    config.validate();
    RunOutput out;
    switch (config.subcommand) {
        case Subcommand::kNonlinearity: out = run_nonlinearity(config); break;
        case Subcommand::kDemon: out = run_demon(config); break;
        case Subcommand::kScaling: out = run_scaling(config); break;
        case Subcommand::kGain: out = run_gain(config); break;
        case Subcommand::kMultik: out = run_multik(config); break;
        case Subcommand::kDla:
        case Subcommand::kWeights: out = run_algebra(config); break;
    }
    out.summary["config"] = config.to_json();
    return out;
}

void write_atomically(const fs::path& path, const std::string& contents) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error(fmt::format("cannot open '{}' for writing", tmp.string()));
        f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        f.flush();
        if (!f) {
            f.close();
            fs::remove(tmp);
            throw Error(fmt::format("failed writing '{}'", tmp.string()));
        }
    }
    fs::rename(tmp, path);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const RunOutput result = execute(config);
        fs::create_directories(config.output_dir);
        for (const auto& [name, contents] : result.files) write_atomically(config.output_dir / name, contents);
        write_atomically(config.output_dir / "summary.json", result.summary.dump(2) + "\n");
        out << result.line << '\n';
        return kExitOk;
    } catch (const InvariantViolation& e) {
        err << "invariant violated: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

int main_entry(const std::vector<std::string>& args, const std::optional<std::string>& env_seed, std::ostream& out,
               std::ostream& err) {
    RunConfig config;
    try {
        config = parse_config(args, env_seed);
    } catch (const HelpRequested& help) {
        out << help.what();
        return kExitOk;
    } catch (const Error& e) {
        err << "configuration error: " << e.what() << "\nRun with --help for usage.\n";
        return kExitConfig;
    }
    return run(config, out, err);
}

}  // namespace demonlab::cli
