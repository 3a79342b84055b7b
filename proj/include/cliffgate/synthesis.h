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

#ifndef CLIFFGATE_SYNTHESIS_H
#define CLIFFGATE_SYNTHESIS_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliffgate/closure.h"
#include "cliffgate/matrix_rep.h"

namespace cliffgate {

/// U = exp(iτ ẽ_label) = cos τ 𝟙 + i sin τ ẽ_label on `qubits` qubits.
struct Gate {
    BasisLabel label;
    double angle = 0;
    size_t qubits = 0;

    ComplexMatrix matrix() const;

    /// Replaces m with U·m in O(4^n) operations.
    void apply_left(ComplexMatrix &m) const;
};

Gate basis_gate(const BasisLabel &label, double tau, size_t n);

/// Gates listed in application order: the realized matrix is g_{m-1} ⋯ g_1 g_0.
struct GateSequence {
    size_t qubits = 0;
    std::vector<Gate> gates;
    /// Operator-norm distance to the intended unitary, when one was given.
    std::optional<double> error;

    ComplexMatrix realized() const;

    /// Sets `error` to the distance between realized() and `target`.
    double measure_error(const ComplexMatrix &target, PhaseMode mode = PhaseMode::Sensitive);

    /// One "gate <label> <angle>" line per gate and a final "error <value>" line when the
    /// error is known. Angles and the error use 17 significant digits.
    std::string str() const;
};

GateSequence parse_gate_sequence(std::string_view text, size_t n);

/// Real coefficients α_I of Σ α_I ẽ_I on `qubits` qubits.
struct CoefficientVector {
    size_t qubits = 0;
    std::map<BasisLabel, double> alpha;

    ComplexMatrix hamiltonian() const;
};

/// exp(iπ/4 ẽ_I) exp(iτ ẽ_J) exp(-iπ/4 ẽ_I), which equals exp(-τ ẽ_I ẽ_J) exactly for
/// anticommuting I, J. Throws std::invalid_argument for a commuting pair, whose
/// commutator vanishes so the caller should use the identity.
GateSequence commutator_gate(const BasisLabel &first, const BasisLabel &second, double tau, size_t n);

/// exp(-τ ẽ_I ẽ_J) computed by eigendecomposition, for checking commutator_gate.
ComplexMatrix commutator_target(const BasisLabel &first, const BasisLabel &second, double tau, size_t n);

/// First-order product formula (Π_I U_I^{α_I/N})^N approximating exp(i Σ α_I ẽ_I).
/// Inside each of the N rounds the terms are applied in ascending canonical label order;
/// zero coefficients are skipped. The error field is measured against the exact exponential.
GateSequence trotter(const CoefficientVector &coeffs, size_t steps, PhaseMode mode = PhaseMode::Sensitive);

struct PowerResult {
    uint64_t power = 0;
    /// power·angle reduced into [-π, π]; (U^angle)^power = U^residual.
    double residual = 0;
};

struct PowerOptions {
    uint64_t max_power = 100'000'000;
};

/// Smallest N >= 1 with |N·angle mod 2π| < tolerance. Tries continued-fraction
/// convergents of angle/2π first and falls back to a linear scan. Throws
/// std::invalid_argument for tolerance <= 0 and CapExceeded past options.max_power.
PowerResult irrational_power(double angle, double tolerance, const PowerOptions &options = {});

/// N·angle reduced into [-π, π].
double reduced_angle(uint64_t power, double angle);

struct GateSetReport {
    size_t qubits = 0;
    GeneratorSet set;
    std::vector<PauliFactorization> factorizations;
    std::vector<std::vector<size_t>> supports;
    /// Every support has at most two qubits, and two-qubit supports are adjacent.
    bool local = true;
    size_t closure_dimension = 0;
    bool universal = false;
};

/// The 2n+1 elements Γ_0, ẽ_{l-1,l} (l = 1..2n-1), ẽ_{012} on n >= 2 qubits, with the
/// Pauli form and support of each and the closure verdict.
GateSetReport twoqubit_gateset(size_t n);

/// Decomposes a Hermitian target over the ẽ_I basis and runs trotter() on it; the error
/// is measured against exp(iH). Coefficients below 1e-14 in magnitude are dropped.
GateSequence synthesize(const ComplexMatrix &h, size_t steps, double tolerance = 1e-10);

}  // namespace cliffgate

#endif
