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

#ifndef QDISCORD_MEASUREMENT_H
#define QDISCORD_MEASUREMENT_H

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "qdiscord/linalg.h"

namespace qdiscord {

using BlochAxis = std::array<double, 3>;

/// A qubit's projective measurement {Π0, Π1} = {(I + a·σ)/2, (I - a·σ)/2}
/// for a unit Bloch axis a = (α, β, γ).
class BlochMeasurement {
   public:
    /// Throws std::invalid_argument unless |α² + β² + γ² - 1| <= 1e-10.
    explicit BlochMeasurement(const BlochAxis &axis);

    /// axis = (sinθ cosφ, sinθ sinφ, cosθ). Any real θ, φ are accepted.
    static BlochMeasurement from_angles(double theta, double phi);
    static BlochMeasurement x() {
        return BlochMeasurement({1, 0, 0});
    }
    static BlochMeasurement y() {
        return BlochMeasurement({0, 1, 0});
    }
    static BlochMeasurement z() {
        return BlochMeasurement({0, 0, 1});
    }

    const BlochAxis &axis() const {
        return axis_;
    }
    /// Canonical chart: θ in [0, π], φ in [0, 2π), φ = 0 at the poles.
    std::pair<double, double> angles() const;

    /// 2x2 unitary; column 0 spans the range of Π0, column 1 that of Π1.
    ComplexMatrix eigenbasis() const;

   private:
    BlochAxis axis_;
};

/// One Bloch measurement per qubit, qubit 0 first.
struct ProductMeasurement {
    std::vector<BlochMeasurement> per_qubit;

    std::size_t size() const {
        return per_qubit.size();
    }
    const BlochMeasurement &operator[](std::size_t k) const {
        return per_qubit[k];
    }

    static ProductMeasurement uniform(int n, const BlochMeasurement &m);
    /// Keeps the measurements of the listed qubits, in the listed order.
    ProductMeasurement restricted_to(std::span<const int> qubits) const;
    /// ⊗_k eigenbasis(k): column j is the product outcome vector for outcome string j.
    ComplexMatrix basis() const;
};

struct AnglePair {
    double theta = 0;
    double phi = 0;
};

/// Spherical coordinates of a ProductMeasurement (θ in [0, π], φ in [0, 2π)).
class MeasurementAngles {
   public:
    /// Throws std::invalid_argument when an angle is out of range.
    explicit MeasurementAngles(std::vector<AnglePair> angles);
    static MeasurementAngles of(const ProductMeasurement &m);

    std::span<const AnglePair> angles() const {
        return angles_;
    }
    ProductMeasurement to_measurement() const;

   private:
    std::vector<AnglePair> angles_;
};

std::pair<ComplexMatrix, ComplexMatrix> projectors(const BlochMeasurement &m);

/// Non-selective product measurement Φ(ρ) = Σ_j Π_j ρ Π_j.
DensityMatrix apply_full(const ProductMeasurement &phi, const DensityMatrix &rho);

/// Φ^{A_k}: measures qubit k only.
DensityMatrix apply_single_site(int k, const BlochMeasurement &m, const DensityMatrix &rho);

/// Measures the listed qubits (each with phi[q]) and leaves the rest untouched.
DensityMatrix apply_on_qubits(const ProductMeasurement &phi, std::span<const int> qubits, const DensityMatrix &rho);

/// σ_0 = ρ, σ_{k+1} = Φ^{A_{k+1}}(σ_k); returns σ_0 .. σ_n.
std::vector<DensityMatrix> measurement_chain(const ProductMeasurement &phi, const DensityMatrix &rho);

/// Outcome probabilities p_j = <b_j|ρ|b_j> in basis-index order (qubit 0 is the
/// most significant bit, bit value 0 is outcome Π0). This is the spectrum of Φ(ρ).
std::vector<double> outcome_probabilities(const ProductMeasurement &phi, const DensityMatrix &rho);

}  // namespace qdiscord

#endif
