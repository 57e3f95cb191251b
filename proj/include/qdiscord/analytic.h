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

#ifndef QDISCORD_ANALYTIC_H
#define QDISCORD_ANALYTIC_H

#include <span>
#include <string_view>
#include <vector>

#include "qdiscord/entropy.h"
#include "qdiscord/measurement.h"
#include "qdiscord/states.h"

namespace qdiscord {

enum class ClosedFormBranch { kWernerGhz, kPauliOdd, kPauliEven };

std::string_view branch_name(ClosedFormBranch branch);

struct ClosedFormResult {
    double value = 0;
    ClosedFormBranch branch = ClosedFormBranch::kWernerGhz;
    int num_qubits = 0;
    double q = 1;
    /// (mu) for Werner-GHZ, (c1, c2, c3) for the Pauli-diagonal family.
    std::vector<double> params;
};

/// Closed-form q-GQD of the n-qubit Werner-GHZ state:
///   x_+^q ln_q x_+ + x_0^q ln_q x_0 - 2 x_m^q ln_q x_m
/// with x_0 = (1-μ)/2^n, x_+ = x_0 + μ, x_m = x_0 + μ/2.
ClosedFormResult werner_ghz_gqd(const WernerGhzParams &p, QParam q);

/// Closed-form q-GQD of the Pauli-diagonal family. Odd n uses (c, d); even n
/// uses c and the four λ_j. |q - 1| < kQSwitchTol evaluates the x ln x limit.
ClosedFormResult pauli_diagonal_gqd(const PauliDiagonalParams &p, QParam q);

/// min over Φ of S_q(Φ(ρ)) for the Pauli-diagonal family: H_q of
/// {(1 ± c)/2^n}, each with multiplicity 2^(n-1).
double optimal_measured_entropy(const PauliDiagonalParams &p, QParam q);

/// Spectrum of Φ(ρ_μ) for a product measurement with the given axes, from the
/// per-outcome closed form. Entry m (outcome bit string, qubit 0 most
/// significant) is
///   x_0 + μ/2 [Π(1+s_i γ_i)/2 + Π(1-s_i γ_i)/2 + 2 Re Π s_i(α_i + iβ_i)/2],
/// s_i = (-1)^{m_i}. Returned in outcome order, not sorted.
std::vector<double> werner_ghz_measured_spectrum(const WernerGhzParams &p, std::span<const BlochAxis> axes);

/// The all-σ_z spectrum: two entries x_0 + μ/2, the rest x_0. Non-increasing.
std::vector<double> werner_ghz_dominant_spectrum(const WernerGhzParams &p);

/// c1 Πα_i + c2 Πβ_i + c3 Πγ_i; Φ(ρ) then has eigenvalues (1 ± this)/2^n.
double pauli_measured_correlation(const PauliDiagonalParams &p, std::span<const BlochAxis> axes);

}  // namespace qdiscord

#endif
