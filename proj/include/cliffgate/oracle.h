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

#ifndef CLIFFGATE_ORACLE_H
#define CLIFFGATE_ORACLE_H

#include <cstdint>
#include <string>
#include <vector>

#include "cliffgate/closure.h"
#include "cliffgate/matrix_rep.h"

namespace cliffgate {

/// Replays a certificate with dense matrices: starts from represent() of the initial
/// elements, forms each step as M_a M_b - M_b M_a, and compares every step with its
/// declared coefficient · Γ_result and the final matrix with scalar · ẽ_target.
/// Returns the largest entrywise deviation seen.
double replay_in_matrices(const Certificate &cert, size_t n);

struct PropertyCheck {
    std::string name;
    bool passed = true;
    double max_deviation = 0;
    size_t cases = 0;
};

struct OracleOptions {
    /// Label pairs are enumerated exhaustively up to this qubit count, sampled above it.
    size_t exhaustive_max_qubits = 3;
    size_t samples = 4096;
    uint64_t seed = 0;
    /// Clifford relations have entries in {0, ±1, ±i}.
    double clifford_tolerance = 1e-14;
    double tolerance = 1e-12;
};

struct OracleReport {
    size_t n = 0;
    bool exhaustive = true;
    std::vector<PropertyCheck> checks;

    bool all_passed() const;
};

/// Symbolic-versus-dense agreement at n qubits: Clifford relations, hermitized squares
/// and hermiticity, trace orthogonality, product and commutator homomorphism, the
/// commute/anticommute predicate, and the recursive construction.
OracleReport run_oracle_suite(size_t n, const OracleOptions &options = {});

}  // namespace cliffgate

#endif
