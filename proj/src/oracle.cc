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

#include "cliffgate/oracle.h"

#include <algorithm>
#include <map>
#include <random>

namespace cliffgate {

double replay_in_matrices(const Certificate &cert, size_t n) {
    if (cert.ambient != 2 * n) {
        throw std::invalid_argument(
            "certificate ambient " + std::to_string(cert.ambient) + " does not match " + std::to_string(n) + " qubits");
    }
    std::map<BasisLabel, ComplexMatrix> derived;
    for (const auto &e : cert.initial) {
        derived.emplace(e.label(), represent(e, n));
    }
    auto lookup = [&](const BasisLabel &label) -> const ComplexMatrix & {
        auto it = derived.find(label);
        if (it == derived.end()) {
            throw std::invalid_argument("certificate uses " + label.str() + " before deriving it");
        }
        return it->second;
    };
    double worst = 0;
    for (const auto &step : cert.steps) {
        const ComplexMatrix &a = lookup(step.parent_a);
        const ComplexMatrix &b = lookup(step.parent_b);
        ComplexMatrix c = a * b - b * a;
        worst = std::max(worst, max_abs_difference(c, represent(ScaledElement(step.coefficient, step.result), n)));
        derived.insert_or_assign(step.result, std::move(c));
    }
    ComplexMatrix expected = represent(hermitize(cert.target).scaled(cert.scalar), n);
    return std::max(worst, max_abs_difference(lookup(cert.target), expected));
}

bool OracleReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck &c) {
        return c.passed;
    });
}

namespace {

struct Tracker {
    PropertyCheck check;
    double tolerance;

    void record(double deviation) {
        check.cases++;
        check.max_deviation = std::max(check.max_deviation, deviation);
        if (!(deviation <= tolerance)) {
            check.passed = false;
        }
    }
    void record_bool(bool ok) {
        check.cases++;
        if (!ok) {
            check.passed = false;
        }
    }
};

}  // namespace

OracleReport run_oracle_suite(size_t n, const OracleOptions &options) {
    if (n == 0 || n > MAX_DENSE_QUBITS) {
        throw std::invalid_argument("oracle suite needs 1 <= n <= " + std::to_string(MAX_DENSE_QUBITS));
    }
    size_t ambient = 2 * n;
    uint64_t label_count = uint64_t{1} << ambient;
    OracleReport report;
    report.n = n;
    report.exhaustive = n <= options.exhaustive_max_qubits;

    std::vector<ComplexMatrix> gammas;
    for (size_t k = 0; k < ambient; k++) {
        gammas.push_back(gamma(k, n));
    }
    const ComplexMatrix unit = identity(n);

    Tracker clifford{{"clifford_relations"}, options.clifford_tolerance};
    for (size_t k = 0; k < ambient; k++) {
        for (size_t l = 0; l < ambient; l++) {
            ComplexMatrix anti = gammas[k] * gammas[l] + gammas[l] * gammas[k];
            ComplexMatrix expected = k == l ? ComplexMatrix(2.0 * unit) : ComplexMatrix::Zero(unit.rows(), unit.cols());
            clifford.record(max_abs_difference(anti, expected));
        }
    }

    Tracker recursive{{"recursive_construction"}, options.clifford_tolerance};
    auto rec = recursive_construct(n);
    for (size_t k = 0; k < ambient; k++) {
        for (size_t l = 0; l < ambient; l++) {
            ComplexMatrix anti = rec[k] * rec[l] + rec[l] * rec[k];
            ComplexMatrix expected = k == l ? ComplexMatrix(2.0 * unit) : ComplexMatrix::Zero(unit.rows(), unit.cols());
            recursive.record(max_abs_difference(anti, expected));
        }
    }

    // Labels to visit singly and in pairs.
    std::vector<uint64_t> singles;
    std::vector<std::pair<uint64_t, uint64_t>> pairs;
    if (report.exhaustive) {
        for (uint64_t a = 0; a < label_count; a++) {
            singles.push_back(a);
            for (uint64_t b = 0; b < label_count; b++) {
                pairs.emplace_back(a, b);
            }
        }
    } else {
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<uint64_t> pick(0, label_count - 1);
        for (size_t s = 0; s < options.samples; s++) {
            singles.push_back(pick(rng));
            pairs.emplace_back(pick(rng), pick(rng));
        }
    }

    std::map<uint64_t, ComplexMatrix> cache;
    auto matrix_of = [&](uint64_t bits) -> const ComplexMatrix & {
        auto it = cache.find(bits);
        if (it == cache.end()) {
            it = cache.emplace(bits, represent(hermitize(BasisLabel(bits, ambient)), n)).first;
        }
        return it->second;
    };

    Tracker squares{{"hermitized_square_and_hermiticity"}, options.tolerance};
    for (uint64_t a : singles) {
        const ComplexMatrix &m = matrix_of(a);
        squares.record(std::max(max_abs_difference(m * m, unit), hermitian_defect(m)));
    }

    Tracker trace{{"trace_orthogonality"}, options.tolerance};
    Tracker prod{{"product_homomorphism"}, options.tolerance};
    Tracker comm{{"commutator_homomorphism"}, options.tolerance};
    Tracker predicate{{"commute_predicate"}, 0};
    const double dim = (double)unit.rows();
    for (auto [a, b] : pairs) {
        ScaledElement ea = hermitize(BasisLabel(a, ambient));
        ScaledElement eb = hermitize(BasisLabel(b, ambient));
        const ComplexMatrix &ma = matrix_of(a);
        const ComplexMatrix &mb = matrix_of(b);
        ComplexMatrix ab = ma * mb;
        ComplexMatrix ba = mb * ma;

        Complex tr = ab.trace();
        trace.record(std::abs(tr - Complex(a == b ? dim : 0.0)));

        prod.record(max_abs_difference(ab, represent(product(ea, eb), n)));
        comm.record(max_abs_difference(ab - ba, represent(commutator(ea, eb), n)));

        // Exactly one of [a,b] = 0 and {a,b} = 0 holds, and commutes() names which.
        bool zero_commutator = (ab - ba).cwiseAbs().maxCoeff() < options.tolerance;
        bool zero_anticommutator = (ab + ba).cwiseAbs().maxCoeff() < options.tolerance;
        bool symbolic = commutes(ea.label(), eb.label());
        predicate.record_bool(zero_commutator != zero_anticommutator && zero_commutator == symbolic);
    }

    for (auto *t : {&clifford, &recursive, &squares, &trace, &prod, &comm, &predicate}) {
        report.checks.push_back(t->check);
    }
    return report;
}

}  // namespace cliffgate
