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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include "qdiscord/errors.h"
#include "qdiscord/parallel.h"

using namespace qdiscord;

TEST(nelder_mead, quadratic_bowl) {
    const Objective f = [](std::span<const double> x) {
        return (x[0] - 1) * (x[0] - 1) + 3 * (x[1] + 2) * (x[1] + 2) + 0.5;
    };
    const auto r = nelder_mead(f, {0, 0}, {});
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, 0.5, 1e-8);
    EXPECT_NEAR(r.x[0], 1, 1e-3);
    EXPECT_NEAR(r.x[1], -2, 1e-3);
}

TEST(nelder_mead, rosenbrock) {
    const Objective f = [](std::span<const double> x) {
        return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
    };
    NelderMeadOptions options;
    options.max_evals = 5000;
    options.tol = 1e-14;
    const auto r = nelder_mead(f, {-1.2, 1}, options);
    EXPECT_NEAR(r.x[0], 1, 1e-4);
    EXPECT_NEAR(r.x[1], 1, 1e-4);
}

TEST(nelder_mead, respects_eval_budget) {
    const Objective f = [](std::span<const double> x) { return std::sin(x[0]) + x[0] * x[0] * 1e-3; };
    NelderMeadOptions options;
    options.max_evals = 10;
    options.tol = 0;
    const auto r = nelder_mead(f, {0.0}, options);
    EXPECT_LE(r.evals, 10);
    EXPECT_FALSE(r.converged);
}

TEST(multi_start, deterministic_across_thread_counts) {
    const Objective f = [](std::span<const double> x) {
        return std::sin(3 * x[0]) * std::cos(2 * x[1]) + 0.1 * (x[0] * x[0] + x[1] * x[1]);
    };
    std::vector<std::vector<double>> starts;
    for (int i = 0; i < 9; ++i) {
        starts.push_back({-2.0 + i * 0.5, 1.5 - i * 0.3});
    }
    const auto a = multi_start_minimize(f, starts, {}, 1);
    const auto b = multi_start_minimize(f, starts, {}, 3);
    EXPECT_EQ(a.best.value, b.best.value);
    EXPECT_EQ(a.best.x, b.best.x);
    EXPECT_EQ(a.best_start, b.best_start);
    EXPECT_EQ(a.total_evals, b.total_evals);
    EXPECT_EQ(a.starts_used, 9);
}

TEST(multi_start, best_is_minimum_over_starts) {
    const Objective f = [](std::span<const double> x) { return std::cos(x[0]) + 0.01 * x[0] * x[0]; };
    std::vector<std::vector<double>> starts{{0.5}, {7}, {-7}};
    const auto all = multi_start_minimize(f, starts, {}, 1);
    for (const auto &s : starts) {
        EXPECT_LE(all.best.value, nelder_mead(f, s, {}).value);
    }
}

TEST(optimizer_config, validation) {
    OptimizerConfig c;
    EXPECT_NO_THROW(c.validate());
    c.starts = 0;
    EXPECT_THROW(c.validate(), ParameterError);
    c = {};
    c.tol = -1;
    EXPECT_THROW(c.validate(), ParameterError);
    c = {};
    c.max_evals = 0;
    EXPECT_THROW(c.validate(), ParameterError);
}

TEST(parallel_map, preserves_order_and_propagates_errors) {
    const auto squares = parallel_map(20, 4, [](std::size_t i) { return static_cast<int>(i * i); });
    for (std::size_t i = 0; i < squares.size(); ++i) {
        EXPECT_EQ(squares[i], static_cast<int>(i * i));
    }
    EXPECT_THROW(parallel_map(8, 3,
                              [](std::size_t i) {
                                  if (i == 5) {
                                      throw std::runtime_error("boom");
                                  }
                                  return 0;
                              }),
                 std::runtime_error);
}

TEST(threads_from_env, reads_variable) {
    setenv("QDISCORD_THREADS", "3", 1);
    EXPECT_EQ(threads_from_env(1), 3);
    setenv("QDISCORD_THREADS", "junk", 1);
    EXPECT_EQ(threads_from_env(2), 2);
    unsetenv("QDISCORD_THREADS");
    EXPECT_EQ(threads_from_env(1), 1);
}
