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

#include "qdiscord/analytic.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "qdiscord/errors.h"

namespace qdiscord {

std::string_view branch_name(ClosedFormBranch branch) {
    switch (branch) {
        case ClosedFormBranch::kWernerGhz:
            return "werner_ghz";
        case ClosedFormBranch::kPauliOdd:
            return "pauli_odd";
        case ClosedFormBranch::kPauliEven:
            return "pauli_even";
    }
    return "unknown";
}

ClosedFormResult werner_ghz_gqd(const WernerGhzParams &p, QParam q) {
    p.validate();
    const double base = (1 - p.mu) / std::ldexp(1.0, p.n);
    const double top = base + p.mu;
    const double mid = base + p.mu / 2;
    ClosedFormResult out;
    out.value = q_log_weighted(top, q) + q_log_weighted(base, q) - 2 * q_log_weighted(mid, q);
    out.branch = ClosedFormBranch::kWernerGhz;
    out.num_qubits = p.n;
    out.q = q.value();
    out.params = {p.mu};
    return out;
}

namespace {

// x ln x with 0 ln 0 = 0.
double xlogx(double x) {
    return x > 0 ? x * std::log(x) : 0.0;
}

double pow_q(double x, double q) {
    return x > 0 ? std::pow(x, q) : 0.0;
}

}  // namespace

ClosedFormResult pauli_diagonal_gqd(const PauliDiagonalParams &p, QParam q) {
    p.validate();
    const double scale = std::ldexp(1.0, -p.n);
    const double c = p.c();
    const double qv = q.value();
    ClosedFormResult out;
    out.num_qubits = p.n;
    out.q = qv;
    out.params = {p.c1, p.c2, p.c3};
    const double half = std::ldexp(1.0, p.n - 1);
    if (p.n % 2 == 1) {
        out.branch = ClosedFormBranch::kPauliOdd;
        const double d = p.d();
        if (q.is_shannon()) {
            out.value = half * (xlogx((1 + d) * scale) + xlogx((1 - d) * scale) - xlogx((1 + c) * scale) -
                                xlogx((1 - c) * scale));
        } else {
            out.value = -half / (qv - 1) *
                        (pow_q((1 + c) * scale, qv) + pow_q((1 - c) * scale, qv) - pow_q((1 + d) * scale, qv) -
                         pow_q((1 - d) * scale, qv));
        }
    } else {
        out.branch = ClosedFormBranch::kPauliEven;
        const double quarter = std::ldexp(1.0, p.n - 2);
        const auto lambdas = pauli_diagonal_lambdas(p);
        if (q.is_shannon()) {
            double joint = 0;
            for (double lambda : lambdas) {
                joint += xlogx(lambda * scale);
            }
            out.value = quarter * joint - half * (xlogx((1 + c) * scale) + xlogx((1 - c) * scale));
        } else {
            double joint = 0;
            for (double lambda : lambdas) {
                joint += pow_q(lambda * scale, qv);
            }
            out.value = -quarter / (qv - 1) *
                        (2 * pow_q((1 + c) * scale, qv) + 2 * pow_q((1 - c) * scale, qv) - joint);
        }
    }
    return out;
}

double optimal_measured_entropy(const PauliDiagonalParams &p, QParam q) {
    p.validate();
    const std::size_t dim = std::size_t{1} << p.n;
    const double scale = std::ldexp(1.0, -p.n);
    const double c = p.c();
    std::vector<double> spectrum(dim / 2, (1 + c) * scale);
    spectrum.insert(spectrum.end(), dim / 2, (1 - c) * scale);
    return tsallis_entropy_probs(Spectrum(std::move(spectrum)), q);
}

std::vector<double> werner_ghz_measured_spectrum(const WernerGhzParams &p, std::span<const BlochAxis> axes) {
    p.validate();
    if (static_cast<int>(axes.size()) != p.n) {
        throw std::invalid_argument("werner_ghz_measured_spectrum: need one axis per qubit");
    }
    const std::size_t dim = std::size_t{1} << p.n;
    const double base = (1 - p.mu) / static_cast<double>(dim);
    std::vector<double> out(dim);
    for (std::size_t m = 0; m < dim; ++m) {
        double up = 1;
        double down = 1;
        Complex coherence = 1;
        for (int i = 0; i < p.n; ++i) {
            const double s = ((m >> (p.n - 1 - i)) & 1) ? -1.0 : 1.0;
            const auto &[a, b, g] = axes[static_cast<std::size_t>(i)];
            up *= (1 + s * g) / 2;
            down *= (1 - s * g) / 2;
            coherence *= s * Complex(a, b) / 2.0;
        }
        out[m] = base + p.mu / 2 * (up + down + 2 * coherence.real());
    }
    return out;
}

std::vector<double> werner_ghz_dominant_spectrum(const WernerGhzParams &p) {
    p.validate();
    const std::size_t dim = std::size_t{1} << p.n;
    const double base = (1 - p.mu) / static_cast<double>(dim);
    std::vector<double> out(dim, base);
    out[0] = out[1] = base + p.mu / 2;
    return out;
}

double pauli_measured_correlation(const PauliDiagonalParams &p, std::span<const BlochAxis> axes) {
    if (static_cast<int>(axes.size()) != p.n) {
        throw std::invalid_argument("pauli_measured_correlation: need one axis per qubit");
    }
    double pa = 1;
    double pb = 1;
    double pg = 1;
    for (const auto &[a, b, g] : axes) {
        pa *= a;
        pb *= b;
        pg *= g;
    }
    return p.c1 * pa + p.c2 * pb + p.c3 * pg;
}

}  // namespace qdiscord
