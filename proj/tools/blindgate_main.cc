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


#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "blindgate/commands.h"
#include "blindgate/errors.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;

std::vector<uint64_t> parse_csv(const std::string &text) {
    std::vector<uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        const unsigned long long v = std::stoull(item, &used, 0);
        if (used != item.size()) {
            throw blindgate::ValidationError("bad outcome \"" + item + "\"");
        }
        out.push_back(v);
    }
    return out;
}

void emit(const blindgate::CommandOutput &out, const std::string &target, const std::string &default_name) {
    std::string path = target;
    if (path.empty()) {
        const char *dir = std::getenv("BLINDGATE_REPORT_DIR");
        path = dir && *dir ? (std::filesystem::path(dir) / default_name).string() : "-";
    }
    if (path == "-") {
        std::cout << out.json;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot write report to " + path);
    }
    file << out.json;
    std::cerr << "report written to " << path << "\n";
}

}  // namespace

int main(int argc, char **argv) {
    using namespace blindgate;
    CLI::App app{"Simulate and verify blind gate-hiding protocols"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kEngineVersion);

    std::string family_path;
    std::string out;

    auto *analyze = app.add_subcommand("analyze", "preserved subspace, support basis and communication cost");
    analyze->add_option("family", family_path, "gate-family JSON file")->required();
    analyze->add_option("--out", out, "report file, or - for standard output");

    RunOptions run_opts;
    std::string mode = "rm";
    std::string forced;
    auto *run = app.add_subcommand("run", "run one protocol instance and print its transcript");
    run->add_option("family", family_path, "gate-family JSON file")->required();
    run->add_option("--mode", mode, "protocol")->check(CLI::IsMember({"rm", "ps2", "ps1"}));
    run->add_option("--choice", run_opts.choice, "index of the gate in the family");
    run->add_option("--theta", run_opts.theta, "angle for a parametrized family (overrides --choice)");
    run->add_option("--seed", run_opts.seed, "random seed");
    run->add_option("--psi", run_opts.psi, "input: zero, random, entref or file:PATH");
    run->add_option("--force-outcomes", forced, "rm: z; ps2: x,y[,reported_y]; ps1: x,y");
    run->add_option("--out", out, "report file, or - for standard output");

    std::string suite = "all";
    uint64_t seed = 1;
    auto *verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("family", family_path, "gate-family JSON file")->required();
    verify->add_option("--suite", suite, "blindness, padding, entropy, orthonormality, theorem1 or all")
        ->check(CLI::IsMember({"blindness", "padding", "entropy", "orthonormality", "theorem1", "all"}));
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--out", out, "report file, or - for standard output");

    CliffordOptions cl_opts;
    bool separable = false;
    auto *clifford = app.add_subcommand("clifford", "separable measurement unitary and free-gate table");
    clifford->add_option("family", family_path, "gate-family JSON file")->required();
    clifford->add_flag("--separable", separable, "report the separable measurement unitary");
    clifford->add_flag("--enumerate", cl_opts.enumerate, "enumerate the free gates of every product basis");
    clifford->add_option("--choice", cl_opts.choice, "family member the measurement unitary is built for");
    clifford->add_option("--out", out, "report file, or - for standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInput;
    }

    FamilyConfig config;
    try {
        config = load_family(family_path);
    } catch (const ConfigError &e) {
        std::cerr << family_path << ": " << e.what() << "\n";
        return kExitInput;
    }

    try {
        CommandOutput result;
        std::string name;
        if (*analyze) {
            result = cmd_analyze(config);
            name = "analyze.json";
        } else if (*run) {
            run_opts.mode = mode == "rm" ? Mode::kReceiveMeasure
                            : mode == "ps2" ? Mode::kPrepareSendTwoRound
                                            : Mode::kPrepareSendSingleRound;
            run_opts.forced = forced.empty() ? std::vector<uint64_t>{} : parse_csv(forced);
            result = cmd_run(config, run_opts);
            name = "run-" + mode + ".json";
        } else if (*verify) {
            result = cmd_verify(config, *parse_suite(suite), seed);
            name = "verify-" + suite + ".json";
        } else {
            cl_opts.separable = separable || !cl_opts.enumerate;
            result = cmd_clifford(config, cl_opts);
            name = "clifford.json";
        }
        emit(result, out, name);
        return result.pass ? kExitOk : kExitCheckFailed;
    } catch (const ConfigError &e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::logic_error &e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
