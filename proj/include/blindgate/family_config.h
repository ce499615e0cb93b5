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


#ifndef BLINDGATE_FAMILY_CONFIG_H
#define BLINDGATE_FAMILY_CONFIG_H

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "blindgate/linalg.h"
#include "blindgate/state.h"
#include "blindgate/subspaces.h"

namespace blindgate {

enum class ConfigErrorCode {
    kSyntax,
    kSchema,
    kUnknownGate,
    kBadArity,
    kBadQubit,
    kBadParameter,
    kNotUnitary,
};

std::string_view config_error_name(ConfigErrorCode code);

/// Parse failure with the offending location as a JSON pointer (and line, for syntax errors).
class ConfigError : public std::runtime_error {
  public:
    ConfigError(ConfigErrorCode code, std::string path, const std::string &message, size_t line = 0);

    ConfigErrorCode code() const { return code_; }
    const std::string &path() const { return path_; }
    size_t line() const { return line_; }

  private:
    ConfigErrorCode code_;
    std::string path_;
    size_t line_;
};

/// One primitive application. `symbolic` marks a parameter bound to the family's theta.
struct GateStep {
    std::string name;
    std::vector<size_t> qubits;
    std::optional<double> param;
    bool symbolic = false;
    /// Only for name == "matrix".
    std::optional<Matrix> matrix;
};

/// Steps in application order: the first step acts first.
using GateProgram = std::vector<GateStep>;

struct ParametrizedSpec {
    GateProgram program;
    std::string label = "U";
    std::vector<double> probes;
};

struct FamilyConfig {
    size_t n = 0;
    std::vector<GateProgram> gates;
    std::vector<std::string> labels;
    std::vector<double> weights;
    std::optional<ParametrizedSpec> parametrized;
};

FamilyConfig parse_family(std::string_view text);
FamilyConfig load_family(const std::string &path);
/// Canonical JSON text; parse_family(serialize_family(c)) serializes to the same text.
std::string serialize_family(const FamilyConfig &config);

/// Dense unitary of a program; `theta` binds symbolic parameters.
Matrix program_unitary(size_t n, const GateProgram &program, std::optional<double> theta = std::nullopt);
GateFamily to_gate_family(const FamilyConfig &config);

/// {"layout": [{"name": ..., "qubits": ...}], "amplitudes": [[index, re, im], ...]}
QuantumState parse_state_fixture(std::string_view text);
QuantumState load_state_fixture(const std::string &path);

}  // namespace blindgate

#endif
