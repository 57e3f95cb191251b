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

#ifndef QDISCORD_ENTROPY_H
#define QDISCORD_ENTROPY_H

#include <cstdint>
#include <span>

#include "qdiscord/linalg.h"

namespace qdiscord {

/// |q - 1| below this routes to the natural-log (Shannon / von Neumann) formulas.
inline constexpr double kQSwitchTol = 1e-9;

/// Entropic index q > 0. Construction with q <= 0 (or NaN) throws ParameterError.
class QParam {
   public:
    explicit QParam(double q);
    double value() const {
        return q_;
    }
    bool is_shannon() const;

   private:
    double q_;
};

/// ln_q x = (x^(1-q) - 1) / (1 - q); natural log at q = 1. All logs are in nats.
double q_log(double x, QParam q);

/// x^q ln_q x, with the 0^q ln_q 0 := 0 convention. Equal to (x - x^q)/(1 - q).
double q_log_weighted(double x, QParam q);

/// H_q(p) = (1 - sum p^q) / (q - 1), Shannon entropy near q = 1.
double tsallis_entropy_probs(const Spectrum &p, QParam q);

/// Same functional on an unsorted list of nonnegative weights. Entries in
/// [-kPsdSlack, 0) count as zero. Used on hot paths where the list is already
/// known to be a distribution.
double tsallis_entropy_weights(std::span<const double> weights, QParam q);

double tsallis_entropy(const DensityMatrix &rho, QParam q);
double von_neumann_entropy(const DensityMatrix &rho);

/// True iff x is majorized by y (x ≺ y): every descending partial sum of y
/// dominates that of x within 1e-12 and the totals agree within 1e-9. The
/// shorter vector is padded with zeros.
bool majorizes(const Spectrum &x, const Spectrum &y);

/// Draws `trials` random pairs x = D y with D doubly stochastic (so x ≺ y) and
/// checks H_q(x) >= H_q(y) - 1e-10 on every one.
bool schur_concavity_witness(QParam q, int trials, std::uint64_t seed = 0x5c0a7u);

}  // namespace qdiscord

#endif
