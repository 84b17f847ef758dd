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

#include <span>
#include <string>

#include "demonlab/experiments/sweep.hpp"

namespace demonlab::experiments {

// CSV text with a header line; reals printed with 17 significant digits so
// identical runs give identical bytes.

/// Demon record columns plus seed, N, phase.
std::string sweep_csv(const TrialSweep& trials);
/// N, phase, eta_mean, eta_std, eta_over_N2, chi
std::string scaling_csv(const ScalingResult& scaling);
/// theta_gain, eta, r2
std::string gain_csv(const GainSweepResult& gain);
/// N, k, I_mean, eta, W
std::string multik_csv(std::span<const MultiAncillaRow> rows);

}  // namespace demonlab::experiments
