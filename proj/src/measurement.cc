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

#include "qdiscord/measurement.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qdiscord/states.h"

namespace qdiscord {

BlochMeasurement::BlochMeasurement(const BlochAxis &axis) : axis_(axis) {
    const double norm2 = axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2];
    if (!(std::abs(norm2 - 1) <= 1e-10)) {
        throw std::invalid_argument("Bloch axis must have unit length");
    }
}

BlochMeasurement BlochMeasurement::from_angles(double theta, double phi) {
    const double s = std::sin(theta);
    BlochAxis a{s * std::cos(phi), s * std::sin(phi), std::cos(theta)};
    const double norm = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
    for (double &v : a) {
        v /= norm;
    }
    return BlochMeasurement(a);
}

std::pair<double, double> BlochMeasurement::angles() const {
    const double theta = std::acos(std::clamp(axis_[2], -1.0, 1.0));
    if (axis_[0] * axis_[0] + axis_[1] * axis_[1] < 1e-28) {
        return {theta, 0.0};
    }
    double phi = std::atan2(axis_[1], axis_[0]);
    if (phi < 0) {
        phi += 2 * std::numbers::pi;
    }
    if (phi >= 2 * std::numbers::pi) {
        phi = 0;
    }
    return {theta, phi};
}

ComplexMatrix BlochMeasurement::eigenbasis() const {
    const auto [a, b, g] = axis_;
    Complex up0;
    Complex up1;
    // (1 + γ, α + iβ) spans the +1 eigenspace; near the south pole use the
    // equivalent (α - iβ, 1 - γ) form.
    if (g > -0.5) {
        const double norm = std::sqrt(2 * (1 + g));
        up0 = Complex(1 + g, 0) / norm;
        up1 = Complex(a, b) / norm;
    } else {
        const double norm = std::sqrt(2 * (1 - g));
        up0 = Complex(a, -b) / norm;
        up1 = Complex(1 - g, 0) / norm;
    }
    ComplexMatrix u(2, 2);
    u << up0, -std::conj(up1), up1, std::conj(up0);
    return u;
}

std::pair<ComplexMatrix, ComplexMatrix> projectors(const BlochMeasurement &m) {
    const auto &a = m.axis();
    const ComplexMatrix n_sigma = a[0] * pauli_x() + a[1] * pauli_y() + a[2] * pauli_z();
    const ComplexMatrix id = identity2();
    return {(id + n_sigma) / 2.0, (id - n_sigma) / 2.0};
}

ProductMeasurement ProductMeasurement::uniform(int n, const BlochMeasurement &m) {
    if (n < 1) {
        throw std::invalid_argument("ProductMeasurement::uniform: n must be >= 1");
    }
    return ProductMeasurement{std::vector<BlochMeasurement>(static_cast<std::size_t>(n), m)};
}

ProductMeasurement ProductMeasurement::restricted_to(std::span<const int> qubits) const {
    ProductMeasurement out;
    for (int q : qubits) {
        if (q < 0 || static_cast<std::size_t>(q) >= per_qubit.size()) {
            throw std::out_of_range("ProductMeasurement::restricted_to: qubit index out of range");
        }
        out.per_qubit.push_back(per_qubit[static_cast<std::size_t>(q)]);
    }
    return out;
}

ComplexMatrix ProductMeasurement::basis() const {
    if (per_qubit.empty()) {
        throw std::invalid_argument("ProductMeasurement::basis: empty measurement");
    }
    ComplexMatrix u = per_qubit[0].eigenbasis();
    for (std::size_t k = 1; k < per_qubit.size(); ++k) {
        u = kron(u, per_qubit[k].eigenbasis());
    }
    return u;
}

MeasurementAngles::MeasurementAngles(std::vector<AnglePair> angles) : angles_(std::move(angles)) {
    for (const auto &a : angles_) {
        if (!(a.theta >= 0 && a.theta <= std::numbers::pi) || !(a.phi >= 0 && a.phi < 2 * std::numbers::pi)) {
            throw std::invalid_argument("measurement angles out of range");
        }
    }
}

MeasurementAngles MeasurementAngles::of(const ProductMeasurement &m) {
    std::vector<AnglePair> out;
    for (const auto &b : m.per_qubit) {
        const auto [theta, phi] = b.angles();
        out.push_back({theta, phi});
    }
    return MeasurementAngles(std::move(out));
}

ProductMeasurement MeasurementAngles::to_measurement() const {
    ProductMeasurement out;
    for (const auto &a : angles_) {
        out.per_qubit.push_back(BlochMeasurement::from_angles(a.theta, a.phi));
    }
    return out;
}

DensityMatrix apply_on_qubits(const ProductMeasurement &phi, std::span<const int> qubits, const DensityMatrix &rho) {
    const int n = rho.num_qubits();
    if (static_cast<int>(phi.size()) != n) {
        throw std::invalid_argument("measurement arity " + std::to_string(phi.size()) + " does not match " +
                                    std::to_string(n) + "-qubit state");
    }
    std::vector<bool> measured(static_cast<std::size_t>(n), false);
    for (int q : qubits) {
        if (q < 0 || q >= n) {
            throw std::out_of_range("qubit index out of range");
        }
        if (measured[static_cast<std::size_t>(q)]) {
            throw std::invalid_argument("qubit listed twice");
        }
        measured[static_cast<std::size_t>(q)] = true;
    }
    std::vector<std::pair<ComplexMatrix, ComplexMatrix>> local;
    for (int k = 0; k < n; ++k) {
        local.push_back(projectors(phi[static_cast<std::size_t>(k)]));
    }
    const int m = static_cast<int>(qubits.size());
    const auto dim = static_cast<Eigen::Index>(rho.dim());
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (std::size_t outcome = 0; outcome < (std::size_t{1} << m); ++outcome) {
        // Bits of `outcome` are assigned to measured qubits in ascending qubit order.
        ComplexMatrix p = ComplexMatrix::Ones(1, 1);
        int bit = m - 1;
        for (int k = 0; k < n; ++k) {
            if (measured[static_cast<std::size_t>(k)]) {
                const bool second = (outcome >> bit) & 1;
                --bit;
                const auto &pair = local[static_cast<std::size_t>(k)];
                p = kron(p, second ? pair.second : pair.first);
            } else {
                p = kron(p, identity2());
            }
        }
        out += p * rho.matrix() * p;
    }
    return DensityMatrix(hermitian_part(out));
}

DensityMatrix apply_full(const ProductMeasurement &phi, const DensityMatrix &rho) {
    std::vector<int> all(static_cast<std::size_t>(rho.num_qubits()));
    for (int k = 0; k < rho.num_qubits(); ++k) {
        all[static_cast<std::size_t>(k)] = k;
    }
    return apply_on_qubits(phi, all, rho);
}

DensityMatrix apply_single_site(int k, const BlochMeasurement &m, const DensityMatrix &rho) {
    const int n = rho.num_qubits();
    if (k < 0 || k >= n) {
        throw std::out_of_range("apply_single_site: qubit index " + std::to_string(k) + " out of range");
    }
    // Only qubit k is measured, so the other entries are placeholders.
    auto phi = ProductMeasurement::uniform(n, m);
    const int site[] = {k};
    return apply_on_qubits(phi, site, rho);
}

std::vector<DensityMatrix> measurement_chain(const ProductMeasurement &phi, const DensityMatrix &rho) {
    const int n = rho.num_qubits();
    if (static_cast<int>(phi.size()) != n) {
        throw std::invalid_argument("measurement_chain: arity mismatch");
    }
    std::vector<DensityMatrix> chain{rho};
    for (int k = 0; k < n; ++k) {
        chain.push_back(apply_single_site(k, phi[static_cast<std::size_t>(k)], chain.back()));
    }
    return chain;
}

std::vector<double> outcome_probabilities(const ProductMeasurement &phi, const DensityMatrix &rho) {
    if (static_cast<int>(phi.size()) != rho.num_qubits()) {
        throw std::invalid_argument("outcome_probabilities: arity mismatch");
    }
    const ComplexMatrix u = phi.basis();
    const ComplexMatrix ru = rho.matrix() * u;
    std::vector<double> p(rho.dim());
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
        p[static_cast<std::size_t>(j)] = u.col(j).dot(ru.col(j)).real();
    }
    return p;
}

}  // namespace qdiscord
