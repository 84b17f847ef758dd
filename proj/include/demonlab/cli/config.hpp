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
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "demonlab/experiments/sweep.hpp"
#include "demonlab/pauli/hamiltonians.hpp"

namespace demonlab::cli {

enum class Subcommand { kNonlinearity, kDemon, kScaling, kGain, kMultik, kDla, kWeights };

std::string_view to_string(Subcommand sub);
std::optional<Subcommand> parse_subcommand(std::string_view text);

inline constexpr int kMinN = 3;
inline constexpr int kMaxN = 8;
/// Algebra closures are dense in 4^N coordinates; larger N is impractical.
inline constexpr int kMaxAlgebraN = 6;

struct RunConfig {
    Subcommand subcommand = Subcommand::kDemon;
    std::uint64_t base_seed = 0;
    std::filesystem::path output_dir = "out";
    int jobs = 0;

    int n = 4;
    int n_min = 3;
    int n_max = 8;
    double coupling = 1.0;
    double theta_gain = 0.2;
    double tau_min = 0.0;
    double tau_max = 1.5;
    int tau_points = 16;
    int layers = 1;
    int trials = 5;
    pauli::Phase phase = pauli::Phase::kOrdered;
    int k = 1;
    double fixed_tau = experiments::kDefaultFixedTau;
    experiments::Pooling pooling = experiments::Pooling::kPooled;

    /// Throws ConfigError when a field is outside its documented range.
    void validate() const;
    experiments::SweepConfig sweep() const;
    /// Every resolved setting, keyed by its config-file name.
    nlohmann::ordered_json to_json() const;
};

/// One documented setting: config-file key, command-line flag, description
/// (with units) and default as text.
struct FieldSpec {
    std::string_view key;
    std::string_view flag;
    std::string_view description;
    std::string_view default_value;
};

std::span<const FieldSpec> field_specs();

/// Parses `value` into the field named `key`; ConfigError on an unknown key
/// or unparsable value.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Flat "key = value" text, one per line, '#' starts a comment.
std::vector<std::pair<std::string, std::string>> parse_config_text(std::string_view text);

/// Thrown by parse_config for --help; carries the rendered usage text.
class HelpRequested : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// argv (without the program name) to a resolved configuration. Precedence:
/// flag > config file > DEMONLAB_SEED (seed only) > built-in default.
/// `env_seed` is the raw DEMONLAB_SEED value, if set.
RunConfig parse_config(const std::vector<std::string>& args, std::optional<std::string> env_seed = std::nullopt);

}  // namespace demonlab::cli
