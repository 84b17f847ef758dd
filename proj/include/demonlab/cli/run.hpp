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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "demonlab/cli/config.hpp"

namespace demonlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitInvariant = 3;

/// Everything a run produces, before anything touches the disk.
struct RunOutput {
    std::vector<std::pair<std::string, std::string>> files;  // name, contents
    nlohmann::ordered_json summary;
    std::string line;
};

/// Runs the configured experiment. Throws on failure; writes nothing.
RunOutput execute(const RunConfig& config);

/// Writes `contents` to a sibling temp file, then renames it over `path`.
void write_atomically(const std::filesystem::path& path, const std::string& contents);

/// execute() plus output: CSVs and summary.json under config.output_dir,
/// one summary line on `out`. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command-line entry: parse, run, map errors to exit codes.
int main_entry(const std::vector<std::string>& args, const std::optional<std::string>& env_seed, std::ostream& out,
               std::ostream& err);

}  // namespace demonlab::cli
