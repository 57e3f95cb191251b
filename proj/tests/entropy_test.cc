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

#include "qdiscord/entropy.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "qdiscord/errors.h"
#include "qdiscord/measurement.h"
#include "qdiscord/random.h"
#include "qdiscord/states.h"

using namespace qdiscord;

namespace {

// Direct power-sum form, valid for q != 1.
double tsallis_power_sum(const std::vector<double> &p, double q) {
    double s = 0;
    for (double x : p) {
        s += std::pow(x, q);
    }
    return (1 - s) / (q - 1);
}

}  // namespace

TEST(qparam, rejects_nonpositive_and_nonfinite) {
    EXPECT_THROW(QParam(0), ParameterError);
    EXPECT_THROW(QParam(-0.5), ParameterError);
    EXPECT_THROW(QParam(std::numeric_limits<double>::quiet_NaN()), ParameterError);
    EXPECT_THROW(QParam(std::numeric_limits<double>::infinity()), ParameterError);
    EXPECT_TRUE(QParam(1 + 1e-10).is_shannon());
    EXPECT_FALSE(QParam(1 + 1e-6).is_shannon());
}

TEST(q_log, frozen_values) {
    EXPECT_NEAR(q_log(0.5, QParam(0.5)), -0.5857864376269049, 1e-15);
    EXPECT_NEAR(q_log(2, QParam(1)), std::log(2.0), 1e-15);
    EXPECT_NEAR(q_log(4, QParam(2)), 0.75, 1e-15);
    EXPECT_NEAR(q_log(0, QParam(0.5)), -2, 1e-15);
    EXPECT_THROW(q_log(0, QParam(1)), std::domain_error);
    EXPECT_THROW(q_log(0, QParam(1.5)), std::domain_error);
    EXPECT_THROW(q_log(-1, QParam(0.5)), std::domain_error);
}

TEST(q_log, continuous_at_one) {
    for (double x : {1e-6, 0.01, 0.3, 0.9, 1.0}) {
        EXPECT_NEAR(q_log(x, QParam(1 + 1e-7)), std::log(x), 1e-5 * (1 + std::abs(std::log(x))));
        EXPECT_NEAR(q_log(x, QParam(1 - 1e-7)), std::log(x), 1e-5 * (1 + std::abs(std::log(x))));
    }
}

TEST(tsallis_entropy, matches_power_sum) {
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        std::vector<double> p(5);
        double total = 0;
        for (auto &x : p) {
            x = rng.uniform();
            total += x;
        }
        for (auto &x : p) {
            x /= total;
        }
        for (double q : {0.1, 0.5, 0.9, 1.3, 2.0, 3.5}) {
            EXPECT_NEAR(tsallis_entropy_probs(Spectrum(p), QParam(q)), tsallis_power_sum(p, q), 1e-12);
        }
    }
}

TEST(tsallis_entropy, uniform_and_pure) {
    for (int d : {2, 4, 8}) {
        std::vector<double> u(static_cast<std::size_t>(d), 1.0 / d);
        for (double q : {0.3, 1.0, 2.5}) {
            EXPECT_NEAR(tsallis_entropy_probs(Spectrum(u), QParam(q)), q_log(d, QParam(q)), 1e-13);
        }
    }
    const std::vector<double> pure{1, 0, 0, 0};
    EXPECT_EQ(tsallis_entropy_probs(Spectrum(pure), QParam(0.5)), 0.0);
    EXPECT_NEAR(tsallis_entropy(DensityMatrix::maximally_mixed(2), QParam(1)), std::log(4.0), 1e-14);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(3)), std::log(8.0), 1e-14);
}

TEST(tsallis_entropy, continuous_at_one) {
    const auto rho = random_density_matrix(2, 17);
    const double h1 = tsallis_entropy(rho, QParam(1));
    EXPECT_NEAR(tsallis_entropy(rho, QParam(1 + 1e-8)), h1, 1e-7);
    EXPECT_NEAR(tsallis_entropy(rho, QParam(1 - 1e-8)), h1, 1e-7);
}

TEST(tsallis_entropy, weights_reject_negative) {
    const std::vector<double> w{0.5, -0.1};
    EXPECT_THROW(tsallis_entropy_weights(w, QParam(0.5)), StateError);
}

TEST(tsallis_entropy, concave_second_derivative) {
    // h(x) = -x^q ln_q x has h'' = -q x^(q-2).
    const auto h = [](double x, double q) { return -q_log_weighted(x, QParam(q)); };
    for (double q : {0.3, 0.7, 1.0, 1.8}) {
        for (double x : {0.1, 0.4, 0.8}) {
            const double step = 1e-4;
            const double fd = (h(x + step, q) - 2 * h(x, q) + h(x - step, q)) / (step * step);
            EXPECT_NEAR(fd, -q * std::pow(x, q - 2), 1e-5 * std::abs(q * std::pow(x, q - 2)));
        }
    }
}

TEST(majorization, basic_relations) {
    const Spectrum flat({0.25, 0.25, 0.25, 0.25});
    const Spectrum peaked({0.7, 0.1, 0.1, 0.1});
    const Spectrum pure({1, 0});
    EXPECT_TRUE(majorizes(flat, peaked));
    EXPECT_FALSE(majorizes(peaked, flat));
    EXPECT_TRUE(majorizes(peaked, peaked));
    EXPECT_TRUE(majorizes(flat, pure));
    const Spectrum a({0.6, 0.2, 0.2});
    const Spectrum b({0.5, 0.5, 0});
    EXPECT_FALSE(majorizes(a, b));
    EXPECT_FALSE(majorizes(b, a));
}

TEST(majorization, schur_concavity_witness) {
    for (double q : {0.2, 0.5, 1.0, 2.0, 4.0}) {
        EXPECT_TRUE(schur_concavity_witness(QParam(q), 200));
    }
}

TEST(majorization, measurement_does_not_lower_entropy) {
    Rng rng(21);
    for (int t = 0; t < 30; ++t) {
        const int n = 1 + t % 3;
        const auto rho = random_density_matrix(n, mix_seed(21, static_cast<std::uint64_t>(t)));
        ProductMeasurement phi;
        for (int k = 0; k < n; ++k) {
            phi.per_qubit.push_back(BlochMeasurement::from_angles(rng.uniform(0, 3.2), rng.uniform(0, 6.3)));
        }
        const auto measured = apply_full(phi, rho);
        EXPECT_TRUE(majorizes(Spectrum::from_eigenvalues(eigvalsh(measured.matrix())),
                              Spectrum::from_eigenvalues(eigvalsh(rho.matrix()))));
        for (double q : {0.25, 1.0, 3.0}) {
            EXPECT_GE(tsallis_entropy(measured, QParam(q)), tsallis_entropy(rho, QParam(q)) - 1e-9);
        }
    }
}

TEST(tsallis_entropy, concave_along_transfer_directions) {
    Rng rng(33);
    for (int t = 0; t < 200; ++t) {
        std::vector<double> p(4);
        double total = 0;
        for (auto &x : p) {
            x = 0.05 + rng.uniform();
            total += x;
        }
        for (auto &x : p) {
            x /= total;
        }
        const std::size_t i = rng.below(4);
        const std::size_t j = (i + 1 + rng.below(3)) % 4;
        const double q = rng.uniform(0.05, 4);
        const double step = 1e-4;
        const auto h = [&](double s) {
            auto moved = p;
            moved[i] += s;
            moved[j] -= s;
            return tsallis_entropy_weights(moved, QParam(q));
        };
        EXPECT_LE((h(step) - 2 * h(0) + h(-step)) / (step * step), 1e-6);
    }
}
