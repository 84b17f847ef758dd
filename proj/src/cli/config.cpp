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

#include "demonlab/cli/config.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "demonlab/common/error.hpp"

namespace demonlab::cli {

namespace {

constexpr std::array<std::pair<Subcommand, std::string_view>, 7> kSubcommands{{
    {Subcommand::kNonlinearity, "nonlinearity"},
    {Subcommand::kDemon, "demon"},
    {Subcommand::kScaling, "scaling"},
    {Subcommand::kGain, "gain"},
    {Subcommand::kMultik, "multik"},
    {Subcommand::kDla, "dla"},
    {Subcommand::kWeights, "weights"},
}};

constexpr std::string_view kSubcommandHelp[] = {
    "parameter-interference probe, separable vs interacting drift",
    "sensing-time sweep of the coherent demon at one N",
    "efficiency vs system size over --n-min..--n-max",
    "efficiency vs feedback angle, 8 gains in [0.05, 0.4] rad",
    "one vs several ancillas over --n-min..--n-max",
    "dynamical Lie algebra dimension at --n",
    "Pauli-weight profile of the algebra at --n",
};

constexpr FieldSpec kFields[] = {
    {"n", "--n", "system size N (qubits), 3..8", "4"},
    {"n_min", "--n-min", "smallest N in size sweeps (qubits)", "3"},
    {"n_max", "--n-max", "largest N in size sweeps (qubits)", "8"},
    {"j", "--j", "coupling J (energy): ferromagnet strength, or J_ij range [-J, J] when chaotic", "1.0"},
    {"theta_gain", "--theta-gain", "feedback angle theta_gain (rad)", "0.2"},
    {"tau_min", "--tau-min", "first sensing time (1/J)", "0"},
    {"tau_max", "--tau-max", "last sensing time (1/J)", "1.5"},
    {"tau_points", "--tau-points", "sensing times in the grid, >= 4", "16"},
    {"layers", "--layers", "ansatz layers L", "1"},
    {"trials", "--trials", "random seeds per point", "5"},
    {"phase", "--phase", "ordered (complete graph) or chaotic (SK)", "ordered"},
    {"k", "--k", "ancillas per cycle, 1..3 (multik compares 1..max(k, 2))", "1"},
    {"fixed_tau", "--fixed-tau", "sensing time for the multik information column (1/J)", "0.5"},
    {"pooling", "--pooling", "efficiency estimate: pooled OLS or per-seed mean", "pooled"},
    {"seed", "--seed", "base seed, trial t uses seed + t (env DEMONLAB_SEED)", "0"},
    {"out", "--out", "output directory", "out"},
    {"jobs", "--jobs", "worker threads, 0 = all hardware threads", "0"},
};

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

template <class T>
T parse_number(std::string_view key, std::string_view value) {
    const std::string text = trim(value);
    T out{};
    const char* begin = text.data();
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw ConfigError(fmt::format("cannot parse '{}' for {}", value, key));
    }
    if constexpr (std::is_floating_point_v<T>) {
        if (!std::isfinite(out)) throw ConfigError(fmt::format("{} must be finite", key));
    }
    return out;
}

int parse_int(std::string_view key, std::string_view value) { return parse_number<int>(key, value); }

void require(bool ok, std::string_view what) {
    if (!ok) throw ConfigError(std::string(what));
}

}  // namespace

std::string_view to_string(Subcommand sub) {
    for (const auto& [s, name] : kSubcommands) {
        if (s == sub) return name;
    }
    return "unknown";
}

std::optional<Subcommand> parse_subcommand(std::string_view text) {
    for (const auto& [s, name] : kSubcommands) {
        if (name == text) return s;
    }
    return std::nullopt;
}

std::span<const FieldSpec> field_specs() { return kFields; }

void apply_setting(RunConfig& c, std::string_view key, std::string_view value) {
    if (key == "n") {
        c.n = parse_int(key, value);
    } else if (key == "n_min") {
        c.n_min = parse_int(key, value);
    } else if (key == "n_max") {
        c.n_max = parse_int(key, value);
    } else if (key == "j") {
        c.coupling = parse_number<double>(key, value);
    } else if (key == "theta_gain") {
        c.theta_gain = parse_number<double>(key, value);
    } else if (key == "tau_min") {
        c.tau_min = parse_number<double>(key, value);
    } else if (key == "tau_max") {
        c.tau_max = parse_number<double>(key, value);
    } else if (key == "tau_points") {
        c.tau_points = parse_int(key, value);
    } else if (key == "layers") {
        c.layers = parse_int(key, value);
    } else if (key == "trials") {
        c.trials = parse_int(key, value);
    } else if (key == "phase") {
        const auto phase = pauli::parse_phase(trim(value));
        if (!phase) throw ConfigError(fmt::format("unknown phase '{}'", value));
        c.phase = *phase;
    } else if (key == "k") {
        c.k = parse_int(key, value);
    } else if (key == "fixed_tau") {
        c.fixed_tau = parse_number<double>(key, value);
    } else if (key == "pooling") {
        const std::string v = trim(value);
        if (v == "pooled") {
            c.pooling = experiments::Pooling::kPooled;
        } else if (v == "per-seed" || v == "per_seed") {
            c.pooling = experiments::Pooling::kPerSeed;
        } else {
            throw ConfigError(fmt::format("unknown pooling '{}'", value));
        }
    } else if (key == "seed") {
        c.base_seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "out") {
        const std::string v = trim(value);
        require(!v.empty(), "out must not be empty");
        c.output_dir = v;
    } else if (key == "jobs") {
        c.jobs = parse_int(key, value);
    } else {
        throw ConfigError(fmt::format("unknown setting '{}'", key));
    }
}

void RunConfig::validate() const {
    require(n >= kMinN && n <= kMaxN, fmt::format("n must be in [{}, {}], got {}", kMinN, kMaxN, n));
    require(n_min >= kMinN && n_max <= kMaxN && n_min <= n_max,
            fmt::format("need {} <= n_min <= n_max <= {}, got {}..{}", kMinN, kMaxN, n_min, n_max));
    require(theta_gain >= 0.0 && theta_gain <= std::numbers::pi, "theta_gain must be in [0, pi]");
    require(tau_min >= 0.0, "tau_min must be >= 0");
    require(tau_max > tau_min, "tau_max must exceed tau_min");
    require(tau_points >= 4, "tau_points must be >= 4");
    require(layers >= 1, "layers must be >= 1");
    require(trials >= 1, "trials must be >= 1");
    require(k >= 1 && k <= 3, fmt::format("k must be in [1, 3], got {}", k));
    require(fixed_tau >= 0.0, "fixed_tau must be >= 0");
    require(jobs >= 0, "jobs must be >= 0");
    if (subcommand == Subcommand::kDla || subcommand == Subcommand::kWeights) {
        require(n <= kMaxAlgebraN, fmt::format("{} supports n <= {}, got {}", to_string(subcommand), kMaxAlgebraN, n));
    }
}

experiments::SweepConfig RunConfig::sweep() const {
    experiments::SweepConfig s;
    s.tau_min = tau_min;
    s.tau_max = tau_max;
    s.tau_points = tau_points;
    s.theta_gain = theta_gain;
    s.trials = trials;
    s.n_range.clear();
    for (int m = n_min; m <= n_max; ++m) s.n_range.push_back(m);
    s.phase = phase;
    s.base_seed = base_seed;
    s.ansatz_layers = layers;
    s.coupling = coupling;
    s.jobs = jobs;
    s.pooling = pooling;
    return s;
}

nlohmann::ordered_json RunConfig::to_json() const {
    nlohmann::ordered_json j;
    j["subcommand"] = to_string(subcommand);
    j["n"] = n;
    j["n_min"] = n_min;
    j["n_max"] = n_max;
    j["j"] = coupling;
    j["theta_gain"] = theta_gain;
    j["tau_min"] = tau_min;
    j["tau_max"] = tau_max;
    j["tau_points"] = tau_points;
    j["layers"] = layers;
    j["trials"] = trials;
    j["phase"] = pauli::to_string(phase);
    j["k"] = k;
    j["fixed_tau"] = fixed_tau;
    j["pooling"] = experiments::to_string(pooling);
    j["seed"] = base_seed;
    j["out"] = output_dir.string();
    j["jobs"] = jobs;
    return j;
}

std::vector<std::pair<std::string, std::string>> parse_config_text(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) throw ConfigError(fmt::format("config line {}: expected key = value", lineno));
        std::string key = trim(std::string_view(body).substr(0, eq));
        std::string value = trim(std::string_view(body).substr(eq + 1));
        if (key.empty()) throw ConfigError(fmt::format("config line {}: missing key", lineno));
        std::replace(key.begin(), key.end(), '-', '_');
        out.emplace_back(std::move(key), std::move(value));
    }
    return out;
}

RunConfig parse_config(const std::vector<std::string>& args, std::optional<std::string> env_seed) {
    CLI::App app{"Coherent feedback demon and dynamical Lie algebra experiments", "demonlab"};
    app.require_subcommand(1);
    app.fallthrough();

    std::map<std::string_view, std::string> flag_values;
    std::map<std::string_view, CLI::Option*> flag_options;
    std::string config_path;
    app.add_option("--config", config_path, "flat key = value settings file, '#' comments");
    for (const FieldSpec& f : kFields) {
        const std::string help = fmt::format("{} [default: {}]", f.description, f.default_value);
        flag_options[f.key] = app.add_option(std::string(f.flag), flag_values[f.key], help);
    }
    for (std::size_t i = 0; i < kSubcommands.size(); ++i) {
        app.add_subcommand(std::string(kSubcommands[i].second), std::string(kSubcommandHelp[i]));
    }
    app.footer(
        "Outputs go to --out as CSV plus summary.json. Exit status: 0 ok, 2 configuration error, "
        "3 numerical invariant violated.");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    RunConfig config;
    const std::string chosen = app.get_subcommands().front()->get_name();
    config.subcommand = *parse_subcommand(chosen);

    if (env_seed && !trim(*env_seed).empty()) apply_setting(config, "seed", *env_seed);
    if (!config_path.empty()) {
        std::ifstream file(config_path);
        if (!file) throw ConfigError(fmt::format("cannot read config file '{}'", config_path));
        std::ostringstream buffer;
        buffer << file.rdbuf();
        for (const auto& [key, value] : parse_config_text(buffer.str())) apply_setting(config, key, value);
    }
    for (const FieldSpec& f : kFields) {
        if (flag_options[f.key]->count() > 0) apply_setting(config, f.key, flag_values[f.key]);
    }
    config.validate();
    return config;
}

}  // namespace demonlab::cli
