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

#include "demonlab/experiments/report.hpp"

#include <fmt/format.h>

#include <iterator>

namespace demonlab::experiments {

std::string sweep_csv(const TrialSweep& trials) {
    std::string out = protocols::demon_csv_header() + ",seed,N,phase\n";
    for (const SeedSweep& s : trials.seeds) {
        for (const protocols::DemonStepRecord& r : s.sweep.records) {
            fmt::format_to(std::back_inserter(out), "{},{},{},{}\n", protocols::demon_csv_row(r), s.seed, trials.n,
                           pauli::to_string(trials.phase));
        }
    }
    return out;
}

std::string scaling_csv(const ScalingResult& scaling) {
    std::string out = "N,phase,eta_mean,eta_std,eta_over_N2,chi\n";
    for (std::size_t i = 0; i < scaling.records.size(); ++i) {
        const ScalingRecord& r = scaling.records[i];
        const std::string chi = i < scaling.chi.size() ? fmt::format("{:.17g}", scaling.chi[i].chi) : "";
        fmt::format_to(std::back_inserter(out), "{},{},{:.17g},{:.17g},{:.17g},{}\n", r.n, pauli::to_string(r.phase),
                       r.eta_mean, r.eta_std, r.eta_mean / (r.n * r.n), chi);
    }
    return out;
}

std::string gain_csv(const GainSweepResult& gain) {
    std::string out = "theta_gain,eta,r2\n";
    for (const GainPoint& p : gain.points) {
        fmt::format_to(std::back_inserter(out), "{:.17g},{:.17g},{:.17g}\n", p.theta_gain, p.eta, p.r_squared);
    }
    return out;
}

std::string multik_csv(std::span<const MultiAncillaRow> rows) {
    std::string out = "N,k,I_mean,eta,W\n";
    for (const MultiAncillaRow& r : rows) {
        fmt::format_to(std::back_inserter(out), "{},{},{:.17g},{:.17g},{:.17g}\n", r.n, r.k, r.i_mean, r.eta, r.work);
    }
    return out;
}

}  // namespace demonlab::experiments
