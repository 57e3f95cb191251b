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

#ifndef QDISCORD_LINALG_H
#define QDISCORD_LINALG_H

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qdiscord {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
/// Eigenvalues in [-kPsdSlack, 0) are treated as zero; anything lower is a PSD violation.
inline constexpr double kPsdSlack = 1e-9;

/// A Hermitian, unit-trace, positive semidefinite operator on n qubits.
///
/// Qubit 0 is the most significant tensor factor: basis index bit (n - 1 - k)
/// holds the value of qubit k. Every module follows this convention.
class DensityMatrix {
   public:
    /// Validates the state invariants and throws StateError on violation. The
    /// stored matrix is the Hermitian part of the input.
    explicit DensityMatrix(const ComplexMatrix &m);

    static DensityMatrix maximally_mixed(int num_qubits);
    /// |psi><psi| / <psi|psi>.
    static DensityMatrix pure(const ComplexVector &psi);

    int num_qubits() const {
        return num_qubits_;
    }
    std::size_t dim() const {
        return static_cast<std::size_t>(m_.rows());
    }
    const ComplexMatrix &matrix() const {
        return m_;
    }
    double purity() const;

   private:
    int num_qubits_;
    ComplexMatrix m_;
};

/// A probability vector sorted in non-increasing order.
class Spectrum {
   public:
    /// Entries must lie in [-1e-12, 1 + 1e-12] (then clamped into [0, 1]) and
    /// sum to 1 within 1e-9. Throws StateError otherwise.
    explicit Spectrum(std::vector<double> probs);

    /// Eigenvalue variant: values in [-kPsdSlack, 0) are clamped to zero.
    static Spectrum from_eigenvalues(std::vector<double> values);

    std::span<const double> probs() const {
        return probs_;
    }
    std::size_t size() const {
        return probs_.size();
    }
    double operator[](std::size_t i) const {
        return probs_[i];
    }

   private:
    struct Trusted {};
    Spectrum(Trusted, std::vector<double> probs) : probs_(std::move(probs)) {
    }
    std::vector<double> probs_;
};

struct EigenDecomposition {
    std::vector<double> values;  // non-increasing
    ComplexMatrix vectors;       // column i pairs with values[i]
};

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

bool is_hermitian(const ComplexMatrix &m, double tol = kHermitianTol);
ComplexMatrix hermitian_part(const ComplexMatrix &m);
double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b);

/// Eigenvalues of a Hermitian matrix, non-increasing. Throws std::invalid_argument
/// when the input is not Hermitian within kHermitianTol.
std::vector<double> eigvalsh(const ComplexMatrix &m);
EigenDecomposition eigh(const ComplexMatrix &m);

/// Reduced state on the qubits in `keep` (any order, duplicates rejected). The
/// result orders the kept qubits ascending by original index.
DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix &rho, std::initializer_list<int> keep);

/// Raw-matrix partial trace used where the intermediate is not a state.
ComplexMatrix partial_trace_matrix(const ComplexMatrix &m, int num_qubits, std::span<const int> keep);

/// Relabels qubits so that qubit i of the result is qubit order[i] of `rho`.
DensityMatrix permute_qubits(const DensityMatrix &rho, std::span<const int> order);

/// U rho U^dagger.
DensityMatrix conjugate(const DensityMatrix &rho, const ComplexMatrix &unitary);

/// Number of qubits for a 2^n dimension; throws std::invalid_argument otherwise.
int qubits_for_dim(std::size_t dim);

}  // namespace qdiscord

#endif
