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

#include "qdiscord/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qdiscord/errors.h"

namespace qdiscord {

int qubits_for_dim(std::size_t dim) {
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two >= 2");
    }
    int n = 0;
    while ((std::size_t{1} << n) < dim) {
        ++n;
    }
    return n;
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = i; j < m.cols(); ++j) {
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) {
                return false;
            }
        }
    }
    return true;
}

ComplexMatrix hermitian_part(const ComplexMatrix &m) {
    return (m + m.adjoint()) * 0.5;
}

double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    return (a - b).norm();
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

EigenDecomposition eigh(const ComplexMatrix &m) {
    if (!is_hermitian(m)) {
        throw std::invalid_argument("eigh: matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(m));
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigh: eigensolver did not converge");
    }
    // Eigen returns ascending order.
    const auto n = m.rows();
    EigenDecomposition out;
    out.values.resize(static_cast<std::size_t>(n));
    out.vectors.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        out.values[static_cast<std::size_t>(i)] = solver.eigenvalues()(n - 1 - i);
        out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
    }
    return out;
}

std::vector<double> eigvalsh(const ComplexMatrix &m) {
    if (!is_hermitian(m)) {
        throw std::invalid_argument("eigvalsh: matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(m), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigvalsh: eigensolver did not converge");
    }
    std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + m.rows());
    std::reverse(values.begin(), values.end());
    return values;
}

DensityMatrix::DensityMatrix(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) {
        throw StateError("density matrix must be square");
    }
    try {
        num_qubits_ = qubits_for_dim(static_cast<std::size_t>(m.rows()));
    } catch (const std::invalid_argument &e) {
        throw StateError(e.what());
    }
    if (!m.allFinite()) {
        throw StateError("density matrix has non-finite entries");
    }
    if (!is_hermitian(m)) {
        throw StateError("density matrix is not Hermitian");
    }
    if (std::abs(m.trace() - Complex(1.0, 0.0)) > kTraceTol) {
        throw StateError("density matrix trace differs from 1");
    }
    m_ = hermitian_part(m);
    auto values = eigvalsh(m_);
    if (values.back() < -kPsdSlack) {
        throw StateError("density matrix is not positive semidefinite (min eigenvalue " +
                         std::to_string(values.back()) + ")");
    }
}

DensityMatrix DensityMatrix::maximally_mixed(int num_qubits) {
    if (num_qubits < 1 || num_qubits > 16) {
        throw std::invalid_argument("maximally_mixed: qubit count out of range");
    }
    const auto d = Eigen::Index{1} << num_qubits;
    return DensityMatrix(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix DensityMatrix::pure(const ComplexVector &psi) {
    const double norm2 = psi.squaredNorm();
    if (!(norm2 > 0)) {
        throw StateError("pure: zero vector");
    }
    return DensityMatrix(psi * psi.adjoint() / norm2);
}

double DensityMatrix::purity() const {
    return (m_ * m_).trace().real();
}

Spectrum::Spectrum(std::vector<double> probs) {
    if (probs.empty()) {
        throw StateError("spectrum must be nonempty");
    }
    for (double &p : probs) {
        if (!(p >= -1e-12 && p <= 1 + 1e-12)) {
            throw StateError("spectrum entry " + std::to_string(p) + " outside [0, 1]");
        }
        p = std::clamp(p, 0.0, 1.0);
    }
    const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    if (std::abs(total - 1) > 1e-9) {
        throw StateError("spectrum entries sum to " + std::to_string(total));
    }
    std::sort(probs.begin(), probs.end(), std::greater<>());
    probs_ = std::move(probs);
}

Spectrum Spectrum::from_eigenvalues(std::vector<double> values) {
    for (double &v : values) {
        if (v < -kPsdSlack) {
            throw StateError("eigenvalue " + std::to_string(v) + " below PSD slack");
        }
        if (v < 0) {
            v = 0;
        }
    }
    return Spectrum(std::move(values));
}

namespace {

std::vector<int> checked_keep(std::span<const int> keep, int n) {
    if (keep.empty()) {
        throw std::invalid_argument("cannot trace out all qubits");
    }
    std::vector<int> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("partial_trace: duplicate qubit index");
    }
    if (sorted.front() < 0 || sorted.back() >= n) {
        throw std::out_of_range("partial_trace: qubit index out of range");
    }
    return sorted;
}

}  // namespace

ComplexMatrix partial_trace_matrix(const ComplexMatrix &m, int num_qubits, std::span<const int> keep) {
    const auto kept = checked_keep(keep, num_qubits);
    const int k = static_cast<int>(kept.size());
    std::vector<int> traced;
    for (int q = 0; q < num_qubits; ++q) {
        if (!std::binary_search(kept.begin(), kept.end(), q)) {
            traced.push_back(q);
        }
    }
    // Split a full index into (kept index, traced index) by gathering bits.
    auto gather = [num_qubits](std::size_t index, const std::vector<int> &qubits) {
        std::size_t out = 0;
        for (int q : qubits) {
            out = (out << 1) | ((index >> (num_qubits - 1 - q)) & 1);
        }
        return out;
    };
    const std::size_t dim = std::size_t{1} << num_qubits;
    const auto out_dim = Eigen::Index{1} << k;
    ComplexMatrix out = ComplexMatrix::Zero(out_dim, out_dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const auto ti = gather(i, traced);
        const auto ki = gather(i, kept);
        for (std::size_t j = 0; j < dim; ++j) {
            if (gather(j, traced) == ti) {
                out(static_cast<Eigen::Index>(ki), static_cast<Eigen::Index>(gather(j, kept))) +=
                    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            }
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const int> keep) {
    return DensityMatrix(partial_trace_matrix(rho.matrix(), rho.num_qubits(), keep));
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::initializer_list<int> keep) {
    return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

DensityMatrix permute_qubits(const DensityMatrix &rho, std::span<const int> order) {
    const int n = rho.num_qubits();
    if (static_cast<int>(order.size()) != n) {
        throw std::invalid_argument("permute_qubits: order length must equal qubit count");
    }
    std::vector<int> check(order.begin(), order.end());
    std::sort(check.begin(), check.end());
    for (int i = 0; i < n; ++i) {
        if (check[static_cast<std::size_t>(i)] != i) {
            throw std::invalid_argument("permute_qubits: order is not a permutation");
        }
    }
    // Bit of new qubit i is taken from old qubit order[i].
    auto remap = [&](std::size_t new_index) {
        std::size_t old_index = 0;
        for (int i = 0; i < n; ++i) {
            const std::size_t bit = (new_index >> (n - 1 - i)) & 1;
            old_index |= bit << (n - 1 - order[static_cast<std::size_t>(i)]);
        }
        return static_cast<Eigen::Index>(old_index);
    };
    const auto dim = static_cast<Eigen::Index>(rho.dim());
    ComplexMatrix out(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            out(i, j) = rho.matrix()(remap(static_cast<std::size_t>(i)), remap(static_cast<std::size_t>(j)));
        }
    }
    return DensityMatrix(out);
}

DensityMatrix conjugate(const DensityMatrix &rho, const ComplexMatrix &unitary) {
    if (unitary.rows() != static_cast<Eigen::Index>(rho.dim()) || unitary.cols() != unitary.rows()) {
        throw std::invalid_argument("conjugate: unitary dimension mismatch");
    }
    return DensityMatrix(hermitian_part(unitary * rho.matrix() * unitary.adjoint()));
}

}  // namespace qdiscord
