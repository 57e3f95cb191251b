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

#ifndef QDISCORD_STATES_H
#define QDISCORD_STATES_H

#include <array>
#include <cstdint>
#include <vector>

#include "qdiscord/linalg.h"

namespace qdiscord {

/// (1 - mu) I/2^n + mu |GHZ_n><GHZ_n| with |GHZ_n> = (|0...0> + |1...1>)/sqrt(2).
struct WernerGhzParams {
    int n = 2;
    double mu = 0;

    /// Throws StateError unless n >= 2 and mu in [0, 1].
    void validate() const;
};

/// (I + c1 X^{⊗n} + c2 Y^{⊗n} + c3 Z^{⊗n}) / 2^n.
struct PauliDiagonalParams {
    int n = 2;
    double c1 = 0;
    double c2 = 0;
    double c3 = 0;

    double d() const;
    /// max(|c1|, |c2|, |c3|).
    double c() const;
    /// Requires n >= 2, d <= 1 and a nonnegative spectrum. Throws StateError
    /// ("parameters outside state space") otherwise.
    void validate() const;
};

DensityMatrix werner_ghz(const WernerGhzParams &p);

/// Closed-form spectrum of werner_ghz, non-increasing.
std::vector<double> werner_ghz_spectrum(const WernerGhzParams &p);

DensityMatrix pauli_diagonal_state(const PauliDiagonalParams &p);

/// The four even-n eigenvalue numerators λ1..λ4 (each eigenvalue is λ_j / 2^n
/// with multiplicity 2^(n-2)). Only meaningful for even n.
std::array<double, 4> pauli_diagonal_lambdas(const PauliDiagonalParams &p);

/// Closed-form spectrum: (1 ± d)/2^n each 2^(n-1) times for odd n,
/// λ_j/2^n each 2^(n-2) times for even n. Non-increasing; no validity check.
std::vector<double> pauli_diagonal_spectrum(const PauliDiagonalParams &p);

/// Two-qubit member with c1 = α, c2 = -α, c3 = 2α - 1.
PauliDiagonalParams alpha_params(double alpha);
DensityMatrix alpha_state(double alpha);

/// (|000><000| + |1+1><1+1|) / 2.
DensityMatrix bros_counterexample();

/// Hilbert-Schmidt random state G G^dagger / tr(G G^dagger), G complex Ginibre.
/// Deterministic per seed. Requires 1 <= n <= 4.
DensityMatrix random_density_matrix(int n, std::uint64_t seed);

/// Haar-random 2x2 unitary.
ComplexMatrix random_qubit_unitary(std::uint64_t seed);

/// U_1 ⊗ ... ⊗ U_n with independent Haar factors.
ComplexMatrix random_local_unitary(int n, std::uint64_t seed);

/// Pauli matrices.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix identity2();

}  // namespace qdiscord

#endif
