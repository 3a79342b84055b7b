// Copyright 2026 The cliffgate Authors
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

#ifndef CLIFFGATE_MATRIX_REP_H
#define CLIFFGATE_MATRIX_REP_H

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cliffgate/clifford.h"

namespace cliffgate {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Largest qubit count for which dense matrices are ever built.
constexpr size_t MAX_DENSE_QUBITS = 12;

/// Qubit ordering convention: in a Kronecker product A_{n-1} ⊗ ... ⊗ A_1 ⊗ A_0 the
/// rightmost factor acts on qubit 0, which is the least significant bit of the row and
/// column index. So Γ_{2k} = 𝟙^{⊗(n-k-1)} ⊗ σ_x ⊗ σ_z^{⊗k} puts σ_x on qubit k and σ_z
/// on qubits 0..k-1.

enum class Pauli : uint8_t { I, X, Y, Z };

ComplexMatrix pauli_matrix(Pauli p);
ComplexMatrix identity(size_t n);
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Number of qubits n of a square 2^n × 2^n matrix; throws otherwise.
size_t qubit_count(const ComplexMatrix &m);

/// Generator Γ_k of Cl(2n, ℂ) as a dense 2^n × 2^n matrix.
ComplexMatrix gamma(size_t k, size_t n);

/// coefficient · Γ_{i1} Γ_{i2} ⋯ Γ_{ik} as a dense matrix, built from gamma().
ComplexMatrix represent(const ScaledElement &element, size_t n);

/// Generators of Cl(2n, ℂ) built by the tensor recursion Cl(2n+2) ≅ Cl(2n) ⊗ Cl(2):
/// from generators e_0..e_{2m-1} of Cl(2m) the next level is 𝟙 ⊗ σ_x, 𝟙 ⊗ σ_y, and
/// e_k ⊗ ẽ_{01}, starting from (σ_x, σ_y).
std::vector<ComplexMatrix> recursive_construct(size_t n);

/// phase · ⊗ factors, with factors[q] acting on qubit q.
struct PauliFactorization {
    std::vector<Pauli> factors;
    Phase phase;

    /// Qubits whose factor is not the identity, ascending.
    std::vector<size_t> support() const;

    /// Highest qubit first, e.g. "-i*IXZ".
    std::string str() const;

    ComplexMatrix matrix() const;

    /// The matrix maps basis column c to amplitude(c) · row (c XOR flip_mask()).
    uint64_t flip_mask() const;
    std::vector<Complex> column_amplitudes() const;

    bool operator==(const PauliFactorization &other) const = default;
};

/// Factorization derived symbolically from the Pauli strings of the generators.
PauliFactorization pauli_factorization(const ScaledElement &element, size_t n);

/// Reads a Pauli factorization off a dense matrix. The coefficient's power of two must
/// be zero. Throws std::invalid_argument when the matrix is not ± or ±i times a Pauli string.
PauliFactorization factorize_pauli_string(const ComplexMatrix &m, double tolerance = 1e-12);

/// Non-identity qubit positions of represent(element, n), read off the dense matrix.
std::vector<size_t> pauli_support(const ScaledElement &element, size_t n);

/// Largest |H - H†| entry.
double hermitian_defect(const ComplexMatrix &m);

/// Largest |U†U - 𝟙| entry.
double unitarity_defect(const ComplexMatrix &u);

/// Largest singular value.
double operator_norm(const ComplexMatrix &m);

enum class PhaseMode { Sensitive, Invariant };

/// Operator-norm distance |a - b|. In Invariant mode, the minimum over unit phases of
/// |a - e^{iφ} b|.
double operator_distance(const ComplexMatrix &a, const ComplexMatrix &b, PhaseMode mode = PhaseMode::Sensitive);

/// Largest entrywise |a - b|.
double max_abs_difference(const ComplexMatrix &a, const ComplexMatrix &b);

/// α_I = Re tr(H ẽ_I) / 2^n for every label I over 2n generators.
/// Throws std::invalid_argument if H is not Hermitian within `tolerance`.
std::map<BasisLabel, double> decompose(const ComplexMatrix &h, double tolerance = 1e-10);

/// Σ α_I ẽ_I.
ComplexMatrix reconstruct(const std::map<BasisLabel, double> &coefficients, size_t n);

/// exp(iτH) for Hermitian H, by eigendecomposition.
ComplexMatrix expm_hermitian(const ComplexMatrix &h, double tau, double tolerance = 1e-10);

/// One row per line, entries "re,im" separated by single spaces, 17 significant digits.
std::string format_matrix(const ComplexMatrix &m);

/// Reads the format_matrix layout (any whitespace between entries). Requires a square
/// matrix whose side is a power of two.
ComplexMatrix parse_matrix(std::string_view text);

/// Evaluates the three exponentials exp(iθ σ_α⊗𝟙), exp(iθ(σ_α⊗𝟙 + 𝟙⊗σ_β)),
/// exp(iθ σ_α⊗σ_β) and the matrix i σ_α⊗σ_β, and records which pairs coincide.
struct ExponentComparison {
    Pauli alpha;
    Pauli beta;
    double angle;
    std::vector<std::string> names;
    std::vector<ComplexMatrix> matrices;
    /// coincide[a][b] is true when matrices a and b agree to 1e-12.
    std::vector<std::vector<bool>> coincide;

    std::string str() const;
};

ExponentComparison compare_exponents(Pauli alpha, Pauli beta, double angle);

}  // namespace cliffgate

#endif
