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

#ifndef QDISCORD_MONOGAMY_H
#define QDISCORD_MONOGAMY_H

#include <span>
#include <vector>

#include "qdiscord/discord.h"

namespace qdiscord {

/// Tolerance on every monogamy-type inequality (10x the optimizer tolerance).
inline constexpr double kMonogamyTol = 1e-6;

/// D_q^Φ of the full state against the nested bipartite terms
/// D_q^Φ(ρ^{(A_1..A_k)A_{k+1}}), k = 1 .. n-1.
struct DecompositionLedger {
    double total = 0;
    std::vector<double> terms;
    double residual = 0;  // total - Σ terms
};

/// Requires n >= 2 and a full-arity Φ.
DecompositionLedger decompose_induced_gqd(const DensityMatrix &rho, const ProductMeasurement &phi, QParam q);

/// D_q(ρ^{(A_1..A_k)A_{k+1}}) minimized over product measurements on the
/// first k+1 qubits, for k = 1 .. n-1 (index k-1 in the result).
std::vector<double> nested_bipartite_gqd(const DensityMatrix &rho, QParam q, const OptimizerConfig &opt);

struct BoundedSumCheck {
    double whole = 0;
    std::vector<double> nested;
    double margin = 0;  // whole - Σ nested
    bool holds = false;
};

/// D_q(ρ) >= Σ_k D_q(ρ^{(A_1..A_k)A_{k+1}}) within kMonogamyTol, every term
/// from an independent optimization. Requires 2 <= n <= 4.
BoundedSumCheck bounded_sum_check(const DensityMatrix &rho, QParam q, const OptimizerConfig &opt = {});

struct MonogamyReport {
    /// Qubit ordering used; order[0] is the focal party A_1.
    std::vector<int> order;
    double whole = 0;
    std::vector<double> pairwise;  // D_q(ρ^{A_1 A_{k+1}})
    std::vector<double> nested;    // D_q(ρ^{(A_1..A_k) A_{k+1}})
    double inequality_margin = 0;  // whole - Σ pairwise
    bool inequality_holds = false;
    bool condition_holds = false;
};

/// Fills every field from independent optimizations on the full and reduced
/// states. `order` relabels the qubits first (empty means identity). Throws
/// std::logic_error if condition_holds is true while inequality_holds is false.
MonogamyReport monogamy_report(const DensityMatrix &rho,
                               QParam q,
                               const OptimizerConfig &opt = {},
                               std::span<const int> order = {});

struct BrosAudit {
    double q = 1;
    double d_a_bc = 0;  // A against BC, product measurements on all three qubits
    double d_ab = 0;
    double d_ac = 0;
    double d_abc = 0;
    bool a_bc_vanishes = false;   // d_a_bc <= 1e-6
    bool ab_nonzero = false;      // d_ab >= 1e-3
    bool ac_vanishes = false;     // d_ac <= 1e-6
    bool abc_matches_ab = false;  // |d_abc - d_ab| <= 1e-5
    bool all_pass() const {
        return a_bc_vanishes && ab_nonzero && ac_vanishes && abc_matches_ab;
    }
};

BrosAudit bros_counterexample_audit(QParam q, const OptimizerConfig &opt = {});

}  // namespace qdiscord

#endif
