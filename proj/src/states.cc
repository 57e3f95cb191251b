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

#include "qdiscord/states.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "qdiscord/errors.h"
#include "qdiscord/random.h"

namespace qdiscord {

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

ComplexMatrix identity2() {
    return ComplexMatrix::Identity(2, 2);
}

namespace {

ComplexMatrix kron_power(const ComplexMatrix &m, int n) {
    ComplexMatrix out = m;
    for (int i = 1; i < n; ++i) {
        out = kron(out, m);
    }
    return out;
}

}  // namespace

void WernerGhzParams::validate() const {
    if (n < 2 || n > 16) {
        throw StateError("Werner-GHZ state needs n >= 2");
    }
    if (!(mu >= 0 && mu <= 1)) {
        throw StateError("Werner-GHZ weight mu must lie in [0, 1]");
    }
}

DensityMatrix werner_ghz(const WernerGhzParams &p) {
    p.validate();
    const auto dim = Eigen::Index{1} << p.n;
    ComplexVector ghz = ComplexVector::Zero(dim);
    ghz(0) = ghz(dim - 1) = 1 / std::sqrt(2.0);
    const ComplexMatrix m = (1 - p.mu) * ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim) +
                            p.mu * ghz * ghz.adjoint();
    return DensityMatrix(m);
}

std::vector<double> werner_ghz_spectrum(const WernerGhzParams &p) {
    p.validate();
    const std::size_t dim = std::size_t{1} << p.n;
    const double floor = (1 - p.mu) / static_cast<double>(dim);
    std::vector<double> out(dim, floor);
    out[0] = floor + p.mu;
    return out;
}

double PauliDiagonalParams::d() const {
    return std::sqrt(c1 * c1 + c2 * c2 + c3 * c3);
}

double PauliDiagonalParams::c() const {
    return std::max({std::abs(c1), std::abs(c2), std::abs(c3)});
}

std::array<double, 4> pauli_diagonal_lambdas(const PauliDiagonalParams &p) {
    const double s = (p.n / 2) % 2 == 0 ? 1.0 : -1.0;  // (-1)^{n/2}
    return {
        1 + p.c3 + p.c1 + s * p.c2,
        1 + p.c3 - p.c1 - s * p.c2,
        1 - p.c3 + p.c1 - s * p.c2,
        1 - p.c3 - p.c1 + s * p.c2,
    };
}

std::vector<double> pauli_diagonal_spectrum(const PauliDiagonalParams &p) {
    const std::size_t dim = std::size_t{1} << p.n;
    const double scale = 1.0 / static_cast<double>(dim);
    std::vector<double> out;
    out.reserve(dim);
    if (p.n % 2 == 1) {
        const double d = p.d();
        out.insert(out.end(), dim / 2, (1 + d) * scale);
        out.insert(out.end(), dim / 2, (1 - d) * scale);
    } else {
        for (double lambda : pauli_diagonal_lambdas(p)) {
            out.insert(out.end(), dim / 4, lambda * scale);
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

void PauliDiagonalParams::validate() const {
    if (n < 2 || n > 16) {
        throw StateError("Pauli-diagonal state needs n >= 2");
    }
    if (!std::isfinite(c1) || !std::isfinite(c2) || !std::isfinite(c3) || d() > 1 + 1e-12) {
        throw StateError("parameters outside state space (d > 1)");
    }
    if (n % 2 == 0) {
        for (double lambda : pauli_diagonal_lambdas(*this)) {
            if (lambda < -1e-12) {
                throw StateError("parameters outside state space (negative eigenvalue)");
            }
        }
    }
}

DensityMatrix pauli_diagonal_state(const PauliDiagonalParams &p) {
    p.validate();
    const auto dim = Eigen::Index{1} << p.n;
    const ComplexMatrix m = (ComplexMatrix::Identity(dim, dim) + p.c1 * kron_power(pauli_x(), p.n) +
                             p.c2 * kron_power(pauli_y(), p.n) + p.c3 * kron_power(pauli_z(), p.n)) /
                            static_cast<double>(dim);
    return DensityMatrix(m);
}

PauliDiagonalParams alpha_params(double alpha) {
    return PauliDiagonalParams{.n = 2, .c1 = alpha, .c2 = -alpha, .c3 = 2 * alpha - 1};
}

DensityMatrix alpha_state(double alpha) {
    return pauli_diagonal_state(alpha_params(alpha));
}

DensityMatrix bros_counterexample() {
    ComplexVector zero(2), one(2), plus(2);
    zero << 1, 0;
    one << 0, 1;
    plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
    auto ket3 = [](const ComplexVector &a, const ComplexVector &b, const ComplexVector &c) {
        return ComplexVector(kron(kron(a, b), c));
    };
    const ComplexVector first = ket3(zero, zero, zero);
    const ComplexVector second = ket3(one, plus, one);
    return DensityMatrix((first * first.adjoint() + second * second.adjoint()) / 2.0);
}

DensityMatrix random_density_matrix(int n, std::uint64_t seed) {
    if (n < 1 || n > 4) {
        throw ParameterError("random_density_matrix supports 1 <= n <= 4");
    }
    Rng rng(mix_seed(seed, 0x51a7e));
    const auto dim = Eigen::Index{1} << n;
    ComplexMatrix g(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            const double re = rng.normal();
            const double im = rng.normal();
            g(i, j) = Complex(re, im);
        }
    }
    ComplexMatrix m = g * g.adjoint();
    m /= m.trace().real();
    return DensityMatrix(hermitian_part(m));
}

ComplexMatrix random_qubit_unitary(std::uint64_t seed) {
    Rng rng(mix_seed(seed, 0x0417a));
    ComplexMatrix g(2, 2);
    for (Eigen::Index i = 0; i < 2; ++i) {
        for (Eigen::Index j = 0; j < 2; ++j) {
            const double re = rng.normal();
            const double im = rng.normal();
            g(i, j) = Complex(re, im);
        }
    }
    // Haar measure: QR of a Ginibre matrix with the phases of R's diagonal removed.
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < 2; ++i) {
        const Complex d = r(i, i);
        q.col(i) *= std::abs(d) > 0 ? d / std::abs(d) : Complex(1, 0);
    }
    return q;
}

ComplexMatrix random_local_unitary(int n, std::uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("random_local_unitary: n must be >= 1");
    }
    ComplexMatrix u = random_qubit_unitary(mix_seed(seed, 0));
    for (int k = 1; k < n; ++k) {
        u = kron(u, random_qubit_unitary(mix_seed(seed, static_cast<std::uint64_t>(k))));
    }
    return u;
}

}  // namespace qdiscord
