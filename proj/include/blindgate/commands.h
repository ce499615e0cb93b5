// Copyright 2026 The Blindgate Authors
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


#ifndef BLINDGATE_COMMANDS_H
#define BLINDGATE_COMMANDS_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blindgate/family_config.h"
#include "blindgate/protocols.h"

namespace blindgate {

inline constexpr const char *kEngineVersion = "0.1.0";

struct CheckRecord {
    std::string name;
    bool pass = true;
    double value = 0.0;
    double tolerance = 0.0;
    std::string anchor;
};

/// Output of one command: the JSON report text plus the conjunction of its checks.
struct CommandOutput {
    std::string json;
    bool pass = true;
    std::vector<CheckRecord> checks;
};

CommandOutput cmd_analyze(const FamilyConfig &config);

struct RunOptions {
    Mode mode = Mode::kReceiveMeasure;
    size_t choice = 0;
    std::optional<double> theta;
    uint64_t seed = 1;
    /// "zero", "random", "entref" or "file:PATH".
    std::string psi = "zero";
    /// rm: z.  ps2: x,y[,reported_y].  ps1: x,y.
    std::vector<uint64_t> forced;
};

CommandOutput cmd_run(const FamilyConfig &config, const RunOptions &options);

enum class Suite { kBlindness, kPadding, kEntropy, kOrthonormality, kResourceBound, kAll };

std::optional<Suite> parse_suite(std::string_view name);
std::string suite_name(Suite suite);

CommandOutput cmd_verify(const FamilyConfig &config, Suite suite, uint64_t seed);

struct CliffordOptions {
    bool separable = true;
    bool enumerate = false;
    size_t choice = 1;
};

CommandOutput cmd_clifford(const FamilyConfig &config, const CliffordOptions &options);

}  // namespace blindgate

#endif
