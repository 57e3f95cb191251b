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

#include "qdiscord/optimize.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "qdiscord/errors.h"
#include "qdiscord/parallel.h"

namespace qdiscord {

int threads_from_env(int fallback) {
    const char *raw = std::getenv("QDISCORD_THREADS");
    if (raw == nullptr) {
        return fallback;
    }
    char *end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 1) {
        return fallback;
    }
    return static_cast<int>(std::min<long>(v, 256));
}

void OptimizerConfig::validate() const {
    if (starts < 1) {
        throw ParameterError("optimizer starts must be >= 1");
    }
    if (max_evals < 1) {
        throw ParameterError("optimizer max_evals must be >= 1");
    }
    if (!(tol > 0)) {
        throw ParameterError("optimizer tolerance must be positive");
    }
    if (threads < 1) {
        throw ParameterError("optimizer threads must be >= 1");
    }
}

namespace {

struct Simplex {
    std::vector<std::vector<double>> points;
    std::vector<double> values;
};

// One collapse-to-tolerance pass. `evals` is shared with the caller's budget.
bool run_simplex(const Objective &f, Simplex &s, double tol, int max_evals, int &evals) {
    const std::size_t n = s.points.front().size();
    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), trial(n), trial2(n);
    auto eval = [&](const std::vector<double> &x) {
        ++evals;
        return f(x);
    };
    auto along = [&](double t, const std::vector<double> &from, std::vector<double> &out) {
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = centroid[i] + t * (from[i] - centroid[i]);
        }
    };
    while (true) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return s.values[a] < s.values[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second_worst = order[n - 1];
        if (s.values[worst] - s.values[best] <= tol) {
            return true;
        }
        if (evals >= max_evals) {
            return false;
        }
        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            const auto &p = s.points[order[k]];
            for (std::size_t i = 0; i < n; ++i) {
                centroid[i] += p[i] / static_cast<double>(n);
            }
        }
        along(-1.0, s.points[worst], trial);
        const double fr = eval(trial);
        if (fr < s.values[best]) {
            along(-2.0, s.points[worst], trial2);
            const double fe = eval(trial2);
            if (fe < fr) {
                s.points[worst] = trial2;
                s.values[worst] = fe;
            } else {
                s.points[worst] = trial;
                s.values[worst] = fr;
            }
            continue;
        }
        if (fr < s.values[second_worst]) {
            s.points[worst] = trial;
            s.values[worst] = fr;
            continue;
        }
        if (fr < s.values[worst]) {
            along(-0.5, s.points[worst], trial2);
            const double fc = eval(trial2);
            if (fc <= fr) {
                s.points[worst] = trial2;
                s.values[worst] = fc;
                continue;
            }
        } else {
            along(0.5, s.points[worst], trial2);
            const double fc = eval(trial2);
            if (fc < s.values[worst]) {
                s.points[worst] = trial2;
                s.values[worst] = fc;
                continue;
            }
        }
        // Shrink toward the best vertex.
        for (std::size_t k = 1; k <= n; ++k) {
            auto &p = s.points[order[k]];
            for (std::size_t i = 0; i < n; ++i) {
                p[i] = s.points[best][i] + 0.5 * (p[i] - s.points[best][i]);
            }
            s.values[order[k]] = eval(p);
        }
    }
}

Simplex build_simplex(const Objective &f, const std::vector<double> &origin, double origin_value, double step,
                      int &evals) {
    Simplex s;
    s.points.push_back(origin);
    s.values.push_back(origin_value);
    for (std::size_t i = 0; i < origin.size(); ++i) {
        auto p = origin;
        p[i] += step;
        ++evals;
        s.values.push_back(f(p));
        s.points.push_back(std::move(p));
    }
    return s;
}

}  // namespace

MinimizeResult nelder_mead(const Objective &f, std::vector<double> start, const NelderMeadOptions &options) {
    MinimizeResult result;
    if (start.empty()) {
        result.value = f(start);
        result.evals = 1;
        result.converged = true;
        return result;
    }
    int evals = 1;
    double best_value = f(start);
    std::vector<double> best = std::move(start);
    double step = options.initial_step;
    bool converged = false;
    while (evals < options.max_evals) {
        Simplex s = build_simplex(f, best, best_value, step, evals);
        converged = run_simplex(f, s, options.tol, options.max_evals, evals);
        const auto it = std::min_element(s.values.begin(), s.values.end());
        const double improvement = best_value - *it;
        if (*it < best_value) {
            best_value = *it;
            best = s.points[static_cast<std::size_t>(it - s.values.begin())];
        }
        if (!converged || improvement <= options.tol) {
            break;
        }
        step = options.initial_step * 0.25;
    }
    result.x = std::move(best);
    result.value = best_value;
    result.evals = evals;
    result.converged = converged;
    return result;
}

MultiStartResult multi_start_minimize(const Objective &f,
                                      const std::vector<std::vector<double>> &starts,
                                      const NelderMeadOptions &options,
                                      int threads) {
    if (starts.empty()) {
        throw ParameterError("multi_start_minimize needs at least one start");
    }
    const auto runs = parallel_map(starts.size(), threads, [&](std::size_t i) { return nelder_mead(f, starts[i], options); });
    MultiStartResult out;
    out.starts_used = static_cast<int>(runs.size());
    out.all_converged = true;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        out.total_evals += runs[i].evals;
        out.all_converged = out.all_converged && runs[i].converged;
        if (i == 0 || runs[i].value < out.best.value) {
            out.best = runs[i];
            out.best_start = static_cast<int>(i);
        }
    }
    return out;
}

}  // namespace qdiscord
