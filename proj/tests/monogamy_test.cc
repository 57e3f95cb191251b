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

#include "qdiscord/monogamy.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numeric>

#include "qdiscord/errors.h"
#include "qdiscord/random.h"
#include "qdiscord/states.h"

using namespace qdiscord;

namespace {

ProductMeasurement random_product(int n, Rng &rng) {
    ProductMeasurement m;
    for (int k = 0; k < n; ++k) {
        m.per_qubit.push_back(BlochMeasurement::from_angles(rng.uniform(0, 3.2), rng.uniform(0, 6.3)));
    }
    return m;
}

}  // namespace

TEST(decomposition, two_qubits_single_term) {
    Rng rng(1);
    const auto rho = random_density_matrix(2, 1);
    const auto phi = random_product(2, rng);
    const auto ledger = decompose_induced_gqd(rho, phi, QParam(0.5));
    ASSERT_EQ(ledger.terms.size(), 1u);
    EXPECT_NEAR(ledger.terms[0], induced_discord(rho, phi, QParam(0.5)), 1e-14);
    EXPECT_NEAR(ledger.residual, 0, 1e-14);
}

TEST(decomposition, telescopes_exactly) {
    Rng rng(2);
    for (int t = 0; t < 30; ++t) {
        const int n = 3 + t % 2;
        const auto rho = random_density_matrix(n, 100 + static_cast<std::uint64_t>(t));
        const auto phi = random_product(n, rng);
        for (double q : {0.5, 1.0, 2.0}) {
            const auto ledger = decompose_induced_gqd(rho, phi, QParam(q));
            EXPECT_EQ(ledger.terms.size(), static_cast<std::size_t>(n - 1));
            EXPECT_LE(std::abs(ledger.residual), 1e-9);
        }
    }
}

TEST(decomposition, maximally_mixed_terms_vanish) {
    Rng rng(3);
    const auto ledger = decompose_induced_gqd(DensityMatrix::maximally_mixed(3), random_product(3, rng), QParam(0.4));
    for (double t : ledger.terms) {
        EXPECT_NEAR(t, 0, 1e-13);
    }
}

TEST(decomposition, errors) {
    Rng rng(4);
    EXPECT_THROW(decompose_induced_gqd(random_density_matrix(1, 1), random_product(1, rng), QParam(0.5)),
                 std::invalid_argument);
    EXPECT_THROW(decompose_induced_gqd(random_density_matrix(3, 1), random_product(2, rng), QParam(0.5)),
                 std::invalid_argument);
}

TEST(bounded_sum, werner_and_random_states) {
    const auto w = bounded_sum_check(werner_ghz({3, 0.6}), QParam(0.5));
    EXPECT_TRUE(w.holds) << w.margin;
    EXPECT_EQ(w.nested.size(), 2u);
    for (std::uint64_t s = 0; s < 5; ++s) {
        const auto r = bounded_sum_check(random_density_matrix(3, 200 + s), QParam(0.5));
        EXPECT_TRUE(r.holds) << r.margin;
    }
    const auto mixed = bounded_sum_check(DensityMatrix::maximally_mixed(3), QParam(1));
    EXPECT_NEAR(mixed.whole, 0, 1e-12);
    EXPECT_THROW(bounded_sum_check(random_density_matrix(1, 1), QParam(0.5)), std::invalid_argument);
}

TEST(bounded_sum, product_states_at_q_not_one) {
    const auto a = random_density_matrix(1, 31);
    const auto b = random_density_matrix(1, 32);
    const auto c = random_density_matrix(1, 33);
    const DensityMatrix product(kron(kron(a.matrix(), b.matrix()), c.matrix()));
    const auto r = bounded_sum_check(product, QParam(0.6));
    EXPECT_TRUE(r.holds) << r.margin;
}

TEST(induced_vs_optimal, nested_terms_dominate_their_minima) {
    Rng rng(5);
    const auto rho = random_density_matrix(3, 41);
    const auto phi = random_product(3, rng);
    const auto ledger = decompose_induced_gqd(rho, phi, QParam(0.7));
    const auto minima = nested_bipartite_gqd(rho, QParam(0.7), {});
    for (std::size_t k = 0; k < minima.size(); ++k) {
        EXPECT_GE(ledger.terms[k], minima[k] - 1e-6);
    }
}

TEST(monogamy_report, werner_and_mixed) {
    const auto w = monogamy_report(werner_ghz({3, 0.5}), QParam(0.5));
    EXPECT_TRUE(w.inequality_holds) << w.inequality_margin;
    EXPECT_EQ(w.pairwise.size(), 2u);
    const auto m = monogamy_report(DensityMatrix::maximally_mixed(3), QParam(0.5));
    EXPECT_TRUE(m.inequality_holds);
    EXPECT_TRUE(m.condition_holds);
    EXPECT_NEAR(m.whole, 0, 1e-12);
    for (double v : m.pairwise) {
        EXPECT_NEAR(v, 0, 1e-12);
    }
}

TEST(monogamy_report, counterexample_flags_per_ordering) {
    // D(AB) = D(BC) = D(ABC) > 0 while D(AC) and D(A|BC) vanish. With A
    // first, discarding C never raises the discord, so the condition holds.
    // With B first, D(BA) + D(BC) exceeds D(ABC) and the condition fails.
    const auto rho = bros_counterexample();
    std::array<int, 3> order{0, 1, 2};
    do {
        const auto r = monogamy_report(rho, QParam(0.9), {}, order);
        EXPECT_EQ(r.order, std::vector<int>(order.begin(), order.end()));
        const bool b_first = order[0] == 1;
        EXPECT_EQ(r.inequality_holds, !b_first);
        EXPECT_EQ(r.condition_holds, !b_first);
        EXPECT_NEAR(r.whole, 0.20713, 1e-4);
    } while (std::next_permutation(order.begin(), order.end()));
}

TEST(counterexample_audit, passes_across_q) {
    for (double q : {0.5, 0.9, 1 - 1e-6}) {
        const auto a = bros_counterexample_audit(QParam(q));
        EXPECT_TRUE(a.a_bc_vanishes) << q << " " << a.d_a_bc;
        EXPECT_TRUE(a.ab_nonzero) << q << " " << a.d_ab;
        EXPECT_TRUE(a.ac_vanishes) << q << " " << a.d_ac;
        EXPECT_TRUE(a.abc_matches_ab) << q << " " << a.d_abc - a.d_ab;
    }
}
