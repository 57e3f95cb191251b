// Copyright 2026 The qdiscord Authors
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

#ifndef QDISCORD_CLI_H
#define QDISCORD_CLI_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qdiscord/discord.h"

namespace qdiscord {

enum ExitCode : int {
    kExitOk = 0,
    kExitSuiteFailed = 1,
    kExitInput = 2,
    kExitState = 3,
    kExitParameter = 4,
};

/// Named state for sweeps: "alpha:A", "werner:N:MU", "pauli:N:C1:C2:C3",
/// "mixed:N" or "file:PATH".
DensityMatrix named_state(std::string_view name);

struct SweepSpec {
    double q_min = 0.05;
    double q_max = 0.95;
    int steps = 19;
    std::vector<std::string> targets{"alpha:0.58", "alpha:0.3"};

    /// Throws ParameterError unless 0 < q_min < q_max, steps >= 2 and
    /// at least one target.
    void validate() const;
    double q_at(int i) const;
};

/// Rows in ascending q. Row i holds q, one q-GQD per target and, with
/// exactly two targets, their difference (first minus second).
std::vector<std::vector<double>> sweep_rows(const SweepSpec &spec, const OptimizerConfig &opt);

/// CSV text for `rows`: "%.12g" fields, LF line endings.
std::string sweep_csv(const SweepSpec &spec, const std::vector<std::vector<double>> &rows);

struct SuiteCheck {
    std::string label;
    bool passed = false;
    double worst = 0;  // most adverse margin or deviation seen
};

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<SuiteCheck> checks;
    std::vector<std::string> notes;
    bool passed() const;
};

inline constexpr std::string_view kSuiteNames[] = {
    "nonnegativity", "telescoping", "monogamy", "oracle_agreement", "majorization"};

/// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(std::string_view suite, std::uint64_t seed, int trials, const OptimizerConfig &opt);

/// Entry point shared by the executable and the tests; args excludes argv[0].
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qdiscord

#endif
