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

#include "qdiscord/entropy.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qdiscord/errors.h"
#include "qdiscord/random.h"

namespace qdiscord {

QParam::QParam(double q) : q_(q) {
    if (!(q > 0) || !std::isfinite(q)) {
        throw ParameterError("q must be a positive finite real, got " + std::to_string(q));
    }
}

bool QParam::is_shannon() const {
    return std::abs(q_ - 1) < kQSwitchTol;
}

double q_log(double x, QParam q) {
    if (!(x >= 0)) {
        throw std::domain_error("q-log of a negative number");
    }
    if (x == 0) {
        if (q.value() >= 1 || q.is_shannon()) {
            throw std::domain_error("q-log divergent at zero");
        }
        return -1 / (1 - q.value());
    }
    if (q.is_shannon()) {
        return std::log(x);
    }
    // expm1 keeps the (1 - q) division accurate for q close to 1.
    return std::expm1((1 - q.value()) * std::log(x)) / (1 - q.value());
}

double q_log_weighted(double x, QParam q) {
    if (!(x >= 0)) {
        throw std::domain_error("q_log_weighted of a negative number");
    }
    if (x == 0) {
        return 0;
    }
    if (q.is_shannon()) {
        return x * std::log(x);
    }
    return -x * std::expm1((q.value() - 1) * std::log(x)) / (1 - q.value());
}

double tsallis_entropy_weights(std::span<const double> weights, QParam q) {
    double acc = 0;
    for (double w : weights) {
        if (w < -kPsdSlack) {
            throw StateError("negative weight " + std::to_string(w) + " in entropy evaluation");
        }
        if (w > 0) {
            acc -= q_log_weighted(w, q);
        }
    }
    return acc;
}

double tsallis_entropy_probs(const Spectrum &p, QParam q) {
    return tsallis_entropy_weights(p.probs(), q);
}

double tsallis_entropy(const DensityMatrix &rho, QParam q) {
    return tsallis_entropy_probs(Spectrum::from_eigenvalues(eigvalsh(rho.matrix())), q);
}

double von_neumann_entropy(const DensityMatrix &rho) {
    return tsallis_entropy(rho, QParam(1.0));
}

bool majorizes(const Spectrum &x, const Spectrum &y) {
    const std::size_t len = std::max(x.size(), y.size());
    auto at = [](const Spectrum &s, std::size_t i) { return i < s.size() ? s[i] : 0.0; };
    double sx = 0;
    double sy = 0;
    for (std::size_t i = 0; i < len; ++i) {
        sx += at(x, i);
        sy += at(y, i);
        if (i + 1 < len && sx > sy + 1e-12) {
            return false;
        }
    }
    return std::abs(sx - sy) <= 1e-9;
}

bool schur_concavity_witness(QParam q, int trials, std::uint64_t seed) {
    if (trials < 1) {
        throw std::invalid_argument("schur_concavity_witness: trials must be >= 1");
    }
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const std::size_t m = 2 + rng.below(7);
        std::vector<double> y(m);
        double total = 0;
        for (auto &v : y) {
            // Occasional exact zeros exercise the 0^q convention.
            v = rng.uniform() < 0.15 ? 0.0 : -std::log(1 - rng.uniform());
            total += v;
        }
        if (total == 0) {
            y[0] = total = 1;
        }
        for (auto &v : y) {
            v /= total;
        }
        // A product of T-transforms is doubly stochastic, hence x ≺ y.
        std::vector<double> x = y;
        const int transforms = 1 + static_cast<int>(rng.below(2 * m));
        for (int k = 0; k < transforms; ++k) {
            const std::size_t i = rng.below(m);
            std::size_t j = rng.below(m - 1);
            if (j >= i) {
                ++j;
            }
            const double s = rng.uniform();
            const double xi = x[i];
            const double xj = x[j];
            x[i] = s * xi + (1 - s) * xj;
            x[j] = s * xj + (1 - s) * xi;
        }
        const Spectrum sx(x);
        const Spectrum sy(y);
        if (!majorizes(sx, sy)) {
            return false;
        }
        if (tsallis_entropy_probs(sx, q) < tsallis_entropy_probs(sy, q) - 1e-10) {
            return false;
        }
    }
    return true;
}

}  // namespace qdiscord
