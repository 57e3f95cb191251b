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

#include "qdiscord/discord.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qdiscord/errors.h"
#include "qdiscord/random.h"

namespace qdiscord {

namespace {

std::vector<int> all_qubits(int n) {
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        out[static_cast<std::size_t>(k)] = k;
    }
    return out;
}

void check_desk_scale(const DensityMatrix &rho) {
    if (rho.num_qubits() > kMaxDeskQubits) {
        throw ParameterError("state with " + std::to_string(rho.num_qubits()) +
                             " qubits exceeds desk-scale limit of " + std::to_string(kMaxDeskQubits));
    }
}

void check_arity(const DensityMatrix &rho, const ProductMeasurement &phi) {
    if (static_cast<int>(phi.size()) != rho.num_qubits()) {
        throw std::invalid_argument("measurement arity " + std::to_string(phi.size()) + " does not match " +
                                    std::to_string(rho.num_qubits()) + "-qubit state");
    }
}

// Value of the bits of `index` at `qubits`, first listed qubit most significant.
std::size_t gather_bits(std::size_t index, std::span<const int> qubits, int n) {
    std::size_t out = 0;
    for (int q : qubits) {
        out = (out << 1) | ((index >> (n - 1 - q)) & 1);
    }
    return out;
}

// Eigenbasis of the Bloch axis at (θ, φ); column 0 is the Π0 outcome vector.
ComplexMatrix angle_basis(double theta, double phi) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    const Complex e = std::polar(1.0, phi);
    ComplexMatrix u(2, 2);
    u << c, -std::conj(e) * s, e * s, c;
    return u;
}

// Measures all qubits; mutual information is summed over the given parties.
// The spectrum of Φ(ρ) and of each of its marginals is a list of outcome
// probabilities, so no eigensolver runs per evaluation.
class FullMeasurementObjective {
   public:
    FullMeasurementObjective(const DensityMatrix &rho, std::vector<std::vector<int>> parties, QParam q)
        : rho_(rho.matrix()), n_(rho.num_qubits()), q_(q) {
        const std::size_t dim = rho.dim();
        baseline_ = -tsallis_entropy(rho, q);
        for (const auto &party : parties) {
            baseline_ += tsallis_entropy(partial_trace(rho, party), q);
            std::vector<std::size_t> map(dim);
            for (std::size_t i = 0; i < dim; ++i) {
                map[i] = gather_bits(i, party, n_);
            }
            party_maps_.push_back(std::move(map));
            party_dims_.push_back(std::size_t{1} << party.size());
        }
    }

    double operator()(std::span<const double> angles) const {
        ComplexMatrix u = angle_basis(angles[0], angles[1]);
        for (int k = 1; k < n_; ++k) {
            u = kron(u, angle_basis(angles[2 * k], angles[2 * k + 1]));
        }
        const ComplexMatrix ru = rho_ * u;
        std::vector<double> p(static_cast<std::size_t>(u.cols()));
        for (Eigen::Index j = 0; j < u.cols(); ++j) {
            p[static_cast<std::size_t>(j)] = u.col(j).dot(ru.col(j)).real();
        }
        double measured_info = -tsallis_entropy_weights(p, q_);
        std::vector<double> marginal;
        for (std::size_t g = 0; g < party_maps_.size(); ++g) {
            marginal.assign(party_dims_[g], 0.0);
            for (std::size_t i = 0; i < p.size(); ++i) {
                marginal[party_maps_[g][i]] += p[i];
            }
            measured_info += tsallis_entropy_weights(marginal, q_);
        }
        return baseline_ - measured_info;
    }

   private:
    ComplexMatrix rho_;
    int n_;
    QParam q_;
    double baseline_ = 0;
    std::vector<std::vector<std::size_t>> party_maps_;
    std::vector<std::size_t> party_dims_;
};

void append_block_eigenvalues(const ComplexMatrix &block, std::vector<double> &out) {
    if (block.rows() == 1) {
        out.push_back(block(0, 0).real());
    } else if (block.rows() == 2) {
        const double a = block(0, 0).real();
        const double d = block(1, 1).real();
        const double mid = (a + d) / 2;
        const double r = std::sqrt((a - d) * (a - d) / 4 + std::norm(block(0, 1)));
        out.push_back(mid + r);
        out.push_back(mid - r);
    } else {
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(block, Eigen::EigenvaluesOnly);
        for (Eigen::Index i = 0; i < block.rows(); ++i) {
            out.push_back(solver.eigenvalues()(i));
        }
    }
}

// Measures only the `measured` party. Φ(ρ) is block diagonal over the
// measured outcomes; its spectrum is the union of the block spectra.
class OneSidedObjective {
   public:
    OneSidedObjective(const DensityMatrix &rho, std::vector<int> measured, QParam q)
        : rho_(rho.matrix()), n_(rho.num_qubits()), measured_(std::move(measured)), q_(q) {
        std::sort(measured_.begin(), measured_.end());
        std::vector<int> rest;
        for (int k = 0; k < n_; ++k) {
            if (!std::binary_search(measured_.begin(), measured_.end(), k)) {
                rest.push_back(k);
            }
        }
        // The rest's marginal is untouched by Φ and cancels.
        baseline_ = tsallis_entropy(partial_trace(rho, measured_), q) - tsallis_entropy(rho, q);
        const std::size_t outcomes = std::size_t{1} << measured_.size();
        blocks_.resize(outcomes);
        for (std::size_t i = 0; i < rho.dim(); ++i) {
            blocks_[gather_bits(i, measured_, n_)].push_back(static_cast<Eigen::Index>(i));
        }
    }

    double operator()(std::span<const double> angles) const {
        ComplexMatrix u = ComplexMatrix::Ones(1, 1);
        std::size_t next = 0;
        for (int k = 0; k < n_; ++k) {
            if (next < measured_.size() && measured_[next] == k) {
                u = kron(u, angle_basis(angles[2 * next], angles[2 * next + 1]));
                ++next;
            } else {
                u = kron(u, ComplexMatrix::Identity(2, 2));
            }
        }
        const ComplexMatrix rotated = u.adjoint() * rho_ * u;
        std::vector<double> outcome_probs;
        std::vector<double> joint;
        for (const auto &idx : blocks_) {
            const auto m = static_cast<Eigen::Index>(idx.size());
            ComplexMatrix block(m, m);
            double tr = 0;
            for (Eigen::Index a = 0; a < m; ++a) {
                for (Eigen::Index b = 0; b < m; ++b) {
                    block(a, b) = rotated(idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)]);
                }
                tr += block(a, a).real();
            }
            outcome_probs.push_back(tr);
            append_block_eigenvalues(block, joint);
        }
        return baseline_ - tsallis_entropy_weights(outcome_probs, q_) + tsallis_entropy_weights(joint, q_);
    }

   private:
    ComplexMatrix rho_;
    int n_;
    std::vector<int> measured_;
    QParam q_;
    double baseline_ = 0;
    std::vector<std::vector<Eigen::Index>> blocks_;
};

ProductMeasurement measurement_from_angles(std::span<const double> x) {
    ProductMeasurement out;
    for (std::size_t k = 0; 2 * k + 1 < x.size(); ++k) {
        out.per_qubit.push_back(BlochMeasurement::from_angles(x[2 * k], x[2 * k + 1]));
    }
    return out;
}

DiscordReport run_optimizer(const Objective &objective,
                            int n,
                            const std::vector<int> &measured,
                            QParam q,
                            const OptimizerConfig &opt) {
    opt.validate();
    const auto starts = measurement_starts(static_cast<int>(measured.size()), opt);
    const NelderMeadOptions nm{.initial_step = 0.5, .tol = opt.tol, .max_evals = opt.max_evals};
    const auto result = multi_start_minimize(objective, starts, nm, opt.threads);

    DiscordReport report;
    report.q = q.value();
    report.raw_value = result.best.value;
    report.nonnegativity_guaranteed = q.value() <= 1 || q.is_shannon();
    report.value = report.raw_value;
    if (report.nonnegativity_guaranteed && report.value < 0 && report.value >= -1e-8) {
        report.value = 0;
    }
    const auto found = measurement_from_angles(result.best.x);
    report.optimal_measurement = ProductMeasurement::uniform(n, BlochMeasurement::z());
    for (std::size_t i = 0; i < measured.size(); ++i) {
        report.optimal_measurement.per_qubit[static_cast<std::size_t>(measured[i])] = found[i];
    }
    report.measured_qubits = measured;
    report.starts_used = result.starts_used;
    report.converged = result.best.converged;
    report.objective_evals = result.total_evals;
    return report;
}

}  // namespace

Bipartition Bipartition::split(int n, std::vector<int> left) {
    Bipartition cut;
    std::sort(left.begin(), left.end());
    for (int k = 0; k < n; ++k) {
        if (!std::binary_search(left.begin(), left.end(), k)) {
            cut.right.push_back(k);
        }
    }
    cut.left = std::move(left);
    cut.validate(n);
    return cut;
}

void Bipartition::validate(int n) const {
    if (left.empty() || right.empty()) {
        throw std::invalid_argument("bipartition needs two nonempty parties");
    }
    std::vector<int> seen(static_cast<std::size_t>(std::max(n, 0)), 0);
    for (const auto *group : {&left, &right}) {
        for (int k : *group) {
            if (k < 0 || k >= n) {
                throw std::invalid_argument("bipartition qubit index out of range");
            }
            if (seen[static_cast<std::size_t>(k)]++ != 0) {
                throw std::invalid_argument("bipartition parties overlap");
            }
        }
    }
    if (static_cast<int>(left.size() + right.size()) != n) {
        throw std::invalid_argument("bipartition does not cover every qubit");
    }
}

double mutual_information_q(const DensityMatrix &rho, QParam q) {
    double total = -tsallis_entropy(rho, q);
    for (int k = 0; k < rho.num_qubits(); ++k) {
        total += tsallis_entropy(partial_trace(rho, {k}), q);
    }
    return total;
}

double bipartite_mutual_information_q(const DensityMatrix &rho, const Bipartition &cut, QParam q) {
    cut.validate(rho.num_qubits());
    return tsallis_entropy(partial_trace(rho, cut.left), q) + tsallis_entropy(partial_trace(rho, cut.right), q) -
           tsallis_entropy(rho, q);
}

double induced_discord(const DensityMatrix &rho, const ProductMeasurement &phi, QParam q) {
    check_arity(rho, phi);
    return mutual_information_q(rho, q) - mutual_information_q(apply_full(phi, rho), q);
}

double induced_discord_bipartite(const DensityMatrix &rho,
                                 const Bipartition &cut,
                                 const ProductMeasurement &phi,
                                 QParam q) {
    check_arity(rho, phi);
    cut.validate(rho.num_qubits());
    return bipartite_mutual_information_q(rho, cut, q) - bipartite_mutual_information_q(apply_full(phi, rho), cut, q);
}

double one_sided_induced_discord(const DensityMatrix &rho,
                                 std::span<const int> measured,
                                 const ProductMeasurement &phi,
                                 QParam q) {
    check_arity(rho, phi);
    const auto cut = Bipartition::split(rho.num_qubits(), std::vector<int>(measured.begin(), measured.end()));
    return bipartite_mutual_information_q(rho, cut, q) -
           bipartite_mutual_information_q(apply_on_qubits(phi, cut.left, rho), cut, q);
}

std::vector<std::vector<double>> measurement_starts(int num_measured, const OptimizerConfig &opt) {
    opt.validate();
    constexpr double kPi = std::numbers::pi;
    constexpr AnglePair kGrid[4] = {{kPi / 4, 0}, {3 * kPi / 4, 0}, {kPi / 4, kPi / 2}, {3 * kPi / 4, kPi / 2}};
    std::vector<std::vector<double>> starts;
    for (int s = 0; s < opt.starts; ++s) {
        std::vector<double> x(static_cast<std::size_t>(2 * num_measured));
        if (s < 8) {
            for (int k = 0; k < num_measured; ++k) {
                const AnglePair &a = kGrid[s < 4 ? s : (s - 4 + k) % 4];
                x[static_cast<std::size_t>(2 * k)] = a.theta;
                x[static_cast<std::size_t>(2 * k + 1)] = a.phi;
            }
        } else {
            Rng rng(mix_seed(opt.seed, static_cast<std::uint64_t>(s)));
            for (int k = 0; k < num_measured; ++k) {
                x[static_cast<std::size_t>(2 * k)] = std::acos(1 - 2 * rng.uniform());
                x[static_cast<std::size_t>(2 * k + 1)] = 2 * kPi * rng.uniform();
            }
        }
        starts.push_back(std::move(x));
    }
    return starts;
}

DiscordReport q_gqd(const DensityMatrix &rho, QParam q, const OptimizerConfig &opt) {
    check_desk_scale(rho);
    const int n = rho.num_qubits();
    std::vector<std::vector<int>> parties;
    for (int k = 0; k < n; ++k) {
        parties.push_back({k});
    }
    const FullMeasurementObjective objective(rho, std::move(parties), q);
    return run_optimizer(objective, n, all_qubits(n), q, opt);
}

DiscordReport q_gqd_bipartite(const DensityMatrix &rho, const Bipartition &cut, QParam q, const OptimizerConfig &opt) {
    check_desk_scale(rho);
    const int n = rho.num_qubits();
    cut.validate(n);
    const FullMeasurementObjective objective(rho, {cut.left, cut.right}, q);
    return run_optimizer(objective, n, all_qubits(n), q, opt);
}

DiscordReport q_qd_one_sided(const DensityMatrix &rho, std::span<const int> measured, QParam q,
                             const OptimizerConfig &opt) {
    check_desk_scale(rho);
    const int n = rho.num_qubits();
    const auto cut = Bipartition::split(n, std::vector<int>(measured.begin(), measured.end()));
    const OneSidedObjective objective(rho, cut.left, q);
    return run_optimizer(objective, n, cut.left, q, opt);
}

}  // namespace qdiscord
