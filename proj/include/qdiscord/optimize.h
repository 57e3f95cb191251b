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

#ifndef QDISCORD_OPTIMIZE_H
#define QDISCORD_OPTIMIZE_H

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace qdiscord {

using Objective = std::function<double(std::span<const double>)>;

struct NelderMeadOptions {
    double initial_step = 0.5;
    /// Converged when max f - min f over the simplex is at most this.
    double tol = 1e-8;
    int max_evals = 2000;
};

struct MinimizeResult {
    std::vector<double> x;
    double value = 0;
    int evals = 0;
    bool converged = false;
};

/// Downhill simplex with the standard reflection/expansion/contraction/shrink
/// coefficients (1, 2, 1/2, 1/2). After the simplex collapses it is rebuilt
/// around the best vertex at a quarter of the initial step and the search
/// continues; it stops once a rebuilt simplex fails to improve by more than
/// `tol` or the evaluation budget runs out.
MinimizeResult nelder_mead(const Objective &f, std::vector<double> start, const NelderMeadOptions &options);

/// Multi-start settings shared by every discord optimization.
struct OptimizerConfig {
    int starts = 16;
    int max_evals = 2000;
    double tol = 1e-8;
    std::uint64_t seed = 20130601;
    /// Worker threads for independent starts; results do not depend on it.
    int threads = 1;

    /// Throws ParameterError on non-positive counts or tolerance.
    void validate() const;
};

struct MultiStartResult {
    MinimizeResult best;
    int best_start = 0;
    int starts_used = 0;
    long total_evals = 0;
    bool all_converged = false;
};

/// Runs nelder_mead from every start and keeps the lowest value (ties go to
/// the earlier start).
MultiStartResult multi_start_minimize(const Objective &f,
                                      const std::vector<std::vector<double>> &starts,
                                      const NelderMeadOptions &options,
                                      int threads);

}  // namespace qdiscord

#endif
