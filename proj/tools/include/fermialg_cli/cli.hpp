// Copyright 2026 The fermialg Authors
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

#ifndef FERMIALG_CLI_CLI_HPP
#define FERMIALG_CLI_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fermialg_cli/json_io.hpp"

namespace fermialg::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitParse = 2,
    kExitCapacity = 3,
    kExitIo = 4,
};

struct Check {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed() const { return residual <= tolerance; }
};

struct Suite {
    std::string name;
    std::vector<Check> checks;
    bool passed() const;
};

struct VerifyOptions {
    int n = 0;
    std::optional<double> tol;
    std::optional<double> theta;
    std::size_t cap = 2048;
};

/// CAR, Majorana, commutator ladder, spectrum, propagator and Lie checks.
std::vector<Suite> run_verify(const VerifyOptions& options);
Json to_json(int n, const std::vector<Suite>& suites);

/// Markdown document with embedded JSON blocks.
std::string build_report(int max_n);

/// Runs one command line (without the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fermialg::cli

#endif
