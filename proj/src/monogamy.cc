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

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qdiscord/errors.h"
#include "qdiscord/states.h"

namespace qdiscord {

namespace {

std::vector<int> prefix(int count) {
    std::vector<int> out(static_cast<std::size_t>(count));
    std::iota(out.begin(), out.end(), 0);
    return out;
}

void require_multiparty(const DensityMatrix &rho) {
    if (rho.num_qubits() < 2) {
        throw std::invalid_argument("need at least two qubits");
    }
    if (rho.num_qubits() > kMaxDeskQubits) {
        throw ParameterError("state exceeds desk-scale limit");
    }
}

}  // namespace

DecompositionLedger decompose_induced_gqd(const DensityMatrix &rho, const ProductMeasurement &phi, QParam q) {
    const int n = rho.num_qubits();
    if (n < 2) {
        throw std::invalid_argument("decompose_induced_gqd: need at least two qubits");
    }
    if (static_cast<int>(phi.size()) != n) {
        throw std::invalid_argument("decompose_induced_gqd: measurement arity mismatch");
    }
    DecompositionLedger ledger;
    ledger.total = induced_discord(rho, phi, q);
    double sum = 0;
    for (int k = 1; k < n; ++k) {
        const auto kept = prefix(k + 1);
        const auto reduced = k + 1 == n ? rho : partial_trace(rho, kept);
        const auto cut = Bipartition::split(k + 1, prefix(k));
        const double term = induced_discord_bipartite(reduced, cut, phi.restricted_to(kept), q);
        ledger.terms.push_back(term);
        sum += term;
    }
    ledger.residual = ledger.total - sum;
    return ledger;
}

std::vector<double> nested_bipartite_gqd(const DensityMatrix &rho, QParam q, const OptimizerConfig &opt) {
    require_multiparty(rho);
    const int n = rho.num_qubits();
    std::vector<double> out;
    for (int k = 1; k < n; ++k) {
        const auto reduced = k + 1 == n ? rho : partial_trace(rho, prefix(k + 1));
        out.push_back(q_gqd_bipartite(reduced, Bipartition::split(k + 1, prefix(k)), q, opt).value);
    }
    return out;
}

BoundedSumCheck bounded_sum_check(const DensityMatrix &rho, QParam q, const OptimizerConfig &opt) {
    require_multiparty(rho);
    BoundedSumCheck out;
    out.whole = q_gqd(rho, q, opt).value;
    out.nested = nested_bipartite_gqd(rho, q, opt);
    out.margin = out.whole - std::accumulate(out.nested.begin(), out.nested.end(), 0.0);
    out.holds = out.margin >= -kMonogamyTol;
    return out;
}

MonogamyReport monogamy_report(const DensityMatrix &rho, QParam q, const OptimizerConfig &opt,
                               std::span<const int> order) {
    require_multiparty(rho);
    const int n = rho.num_qubits();
    MonogamyReport report;
    report.order = order.empty() ? prefix(n) : std::vector<int>(order.begin(), order.end());
    const auto relabeled = order.empty() ? rho : permute_qubits(rho, order);

    report.whole = q_gqd(relabeled, q, opt).value;
    report.nested = nested_bipartite_gqd(relabeled, q, opt);
    for (int k = 1; k < n; ++k) {
        const int pair[] = {0, k};
        report.pairwise.push_back(q_gqd(partial_trace(relabeled, pair), q, opt).value);
    }
    report.inequality_margin =
        report.whole - std::accumulate(report.pairwise.begin(), report.pairwise.end(), 0.0);
    report.inequality_holds = report.inequality_margin >= -kMonogamyTol;
    report.condition_holds = true;
    for (std::size_t k = 0; k < report.nested.size(); ++k) {
        if (report.nested[k] < report.pairwise[k] - kMonogamyTol) {
            report.condition_holds = false;
        }
    }
    if (report.condition_holds && !report.inequality_holds) {
        throw std::logic_error("monogamy implication violated (margin " + std::to_string(report.inequality_margin) +
                               "): nested terms dominate pairwise terms but the inequality fails");
    }
    return report;
}

BrosAudit bros_counterexample_audit(QParam q, const OptimizerConfig &opt) {
    const auto rho = bros_counterexample();
    BrosAudit audit;
    audit.q = q.value();
    audit.d_a_bc = q_gqd_bipartite(rho, Bipartition::split(3, {0}), q, opt).value;
    audit.d_ab = q_gqd(partial_trace(rho, {0, 1}), q, opt).value;
    audit.d_ac = q_gqd(partial_trace(rho, {0, 2}), q, opt).value;
    audit.d_abc = q_gqd(rho, q, opt).value;
    audit.a_bc_vanishes = audit.d_a_bc <= 1e-6;
    audit.ab_nonzero = audit.d_ab >= 1e-3;
    audit.ac_vanishes = audit.d_ac <= 1e-6;
    audit.abc_matches_ab = std::abs(audit.d_abc - audit.d_ab) <= 1e-5;
    return audit;
}

}  // namespace qdiscord
