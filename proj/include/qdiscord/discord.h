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

#ifndef QDISCORD_DISCORD_H
#define QDISCORD_DISCORD_H

#include <span>
#include <vector>

#include "qdiscord/entropy.h"
#include "qdiscord/linalg.h"
#include "qdiscord/measurement.h"
#include "qdiscord/optimize.h"

namespace qdiscord {

/// Largest state the optimizers accept.
inline constexpr int kMaxDeskQubits = 4;

/// Two complementary nonempty groups of qubits.
struct Bipartition {
    std::vector<int> left;
    std::vector<int> right;

    /// `left` against every other qubit of an n-qubit system.
    static Bipartition split(int n, std::vector<int> left);
    /// Throws std::invalid_argument unless the groups partition {0, ..., n-1}.
    void validate(int n) const;
};

struct DiscordReport {
    /// Minimum found, clamped to 0 when it lies in [-1e-8, 0) and q <= 1.
    double value = 0;
    double raw_value = 0;
    double q = 1;
    /// Full-arity measurement; only `measured_qubits` entries are used.
    ProductMeasurement optimal_measurement;
    std::vector<int> measured_qubits;
    int starts_used = 0;
    bool converged = false;
    long objective_evals = 0;
    /// False for q > 1, where the minimum may legitimately be negative.
    bool nonnegativity_guaranteed = true;
};

/// I_q(ρ) = Σ_i S_q(ρ_i) - S_q(ρ) over single-qubit marginals.
double mutual_information_q(const DensityMatrix &rho, QParam q);

/// S_q(ρ_left) + S_q(ρ_right) - S_q(ρ).
double bipartite_mutual_information_q(const DensityMatrix &rho, const Bipartition &cut, QParam q);

/// D_q^Φ(ρ) = I_q(ρ) - I_q(Φ(ρ)), evaluated through the explicit channel.
double induced_discord(const DensityMatrix &rho, const ProductMeasurement &phi, QParam q);

/// Two-party version: Φ measures every qubit, mutual information is taken across `cut`.
double induced_discord_bipartite(const DensityMatrix &rho,
                                 const Bipartition &cut,
                                 const ProductMeasurement &phi,
                                 QParam q);

/// Φ measures only the qubits of `measured`; mutual information across
/// (measured, rest). `phi` has full arity and its other entries are ignored.
double one_sided_induced_discord(const DensityMatrix &rho,
                                 std::span<const int> measured,
                                 const ProductMeasurement &phi,
                                 QParam q);

/// q-global quantum discord: min over product measurements of induced_discord.
/// Throws ParameterError beyond kMaxDeskQubits qubits.
DiscordReport q_gqd(const DensityMatrix &rho, QParam q, const OptimizerConfig &opt = {});

/// min over product measurements of induced_discord_bipartite.
DiscordReport q_gqd_bipartite(const DensityMatrix &rho,
                              const Bipartition &cut,
                              QParam q,
                              const OptimizerConfig &opt = {});

/// One-sided q-quantum discord with product projective measurements on the
/// qubits of `measured` (nonempty, proper subset).
DiscordReport q_qd_one_sided(const DensityMatrix &rho,
                             std::span<const int> measured,
                             QParam q,
                             const OptimizerConfig &opt = {});

/// Starting angle vectors (θ_0, φ_0, θ_1, φ_1, ...) for `num_measured` qubits:
/// up to 8 coarse-grid patterns, then seeded uniform draws on the sphere.
std::vector<std::vector<double>> measurement_starts(int num_measured, const OptimizerConfig &opt);

}  // namespace qdiscord

#endif
