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

#include "cliffgate/synthesis.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace cliffgate {

namespace {

constexpr double TWO_PI = 2 * std::numbers::pi;

/// Decomposition coefficients smaller than this are treated as rounding noise.
constexpr double DROP_BELOW = 1e-14;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double(std::string_view text, const std::string &context) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument(context + ": bad number '" + std::string(text) + "'");
    }
    return v;
}

}  // namespace

ComplexMatrix Gate::matrix() const {
    ComplexMatrix e = pauli_factorization(hermitize(label), qubits).matrix();
    return Complex(std::cos(angle), 0) * identity(qubits) + Complex(0, std::sin(angle)) * e;
}

void Gate::apply_left(ComplexMatrix &m) const {
    PauliFactorization p = pauli_factorization(hermitize(label), qubits);
    uint64_t x = p.flip_mask();
    auto amps = p.column_amplitudes();
    ComplexMatrix flipped(m.rows(), m.cols());
    // (P m)[c ^ x, :] = amp(c) m[c, :].
    for (Eigen::Index c = 0; c < m.rows(); c++) {
        flipped.row((Eigen::Index)((uint64_t)c ^ x)) = amps[(size_t)c] * m.row(c);
    }
    m = std::cos(angle) * m + Complex(0, std::sin(angle)) * flipped;
}

Gate basis_gate(const BasisLabel &label, double tau, size_t n) {
    if (label.ambient() != 2 * n) {
        throw std::invalid_argument(
            "gate label " + label.str() + " has ambient " + std::to_string(label.ambient()) + ", expected " +
            std::to_string(2 * n));
    }
    if (n == 0 || n > MAX_DENSE_QUBITS) {
        throw std::invalid_argument("gate qubit count " + std::to_string(n) + " out of range");
    }
    return {label, tau, n};
}

ComplexMatrix GateSequence::realized() const {
    ComplexMatrix m = identity(qubits);
    for (const auto &g : gates) {
        g.apply_left(m);
    }
    return m;
}

double GateSequence::measure_error(const ComplexMatrix &target, PhaseMode mode) {
    error = operator_distance(realized(), target, mode);
    return *error;
}

std::string GateSequence::str() const {
    std::string out;
    for (const auto &g : gates) {
        out += "gate " + g.label.str() + " " + format_double(g.angle) + "\n";
    }
    if (error) {
        out += "error " + format_double(*error) + "\n";
    }
    return out;
}

GateSequence parse_gate_sequence(std::string_view text, size_t n) {
    GateSequence seq;
    seq.qubits = n;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_number = 0;
    while (std::getline(in, line)) {
        line_number++;
        if (line.empty()) {
            continue;
        }
        std::string context = "gate sequence line " + std::to_string(line_number);
        if (seq.error) {
            throw std::invalid_argument(context + ": content after the error line");
        }
        std::istringstream fields(line);
        std::string kind, a, b, extra;
        fields >> kind >> a;
        if (kind == "gate") {
            fields >> b;
            if (b.empty() || (fields >> extra)) {
                throw std::invalid_argument(context + ": expected 'gate <label> <angle>'");
            }
            ScaledElement e;
            try {
                e = parse_element(a, 2 * n);
            } catch (const ParseError &ex) {
                throw std::invalid_argument(context + ": " + ex.what());
            }
            if (e.is_zero() || e.coefficient() != Coefficient{}) {
                throw std::invalid_argument(context + ": gate label must be a bare e[...] label");
            }
            seq.gates.push_back(basis_gate(e.label(), parse_double(b, context), n));
        } else if (kind == "error") {
            if (a.empty() || (fields >> extra)) {
                throw std::invalid_argument(context + ": expected 'error <value>'");
            }
            seq.error = parse_double(a, context);
        } else {
            throw std::invalid_argument(context + ": unknown record '" + kind + "'");
        }
    }
    return seq;
}

ComplexMatrix CoefficientVector::hamiltonian() const {
    return reconstruct(alpha, qubits);
}

GateSequence commutator_gate(const BasisLabel &first, const BasisLabel &second, double tau, size_t n) {
    if (commutes(first, second)) {
        throw std::invalid_argument(
            "commutator_gate: " + first.str() + " and " + second.str() +
            " commute, so the commutator vanishes and the gate is the identity");
    }
    constexpr double QUARTER_TURN = std::numbers::pi / 4;
    GateSequence seq;
    seq.qubits = n;
    seq.gates = {
        basis_gate(first, -QUARTER_TURN, n),
        basis_gate(second, tau, n),
        basis_gate(first, QUARTER_TURN, n),
    };
    return seq;
}

ComplexMatrix commutator_target(const BasisLabel &first, const BasisLabel &second, double tau, size_t n) {
    // -τ ẽ_I ẽ_J = iτ (i ẽ_I ẽ_J), and i ẽ_I ẽ_J is Hermitian when I and J anticommute.
    ComplexMatrix h = Complex(0, 1) * represent(hermitize(first), n) * represent(hermitize(second), n);
    return expm_hermitian(h, tau);
}

GateSequence trotter(const CoefficientVector &coeffs, size_t steps, PhaseMode mode) {
    if (steps == 0) {
        throw std::invalid_argument("trotter needs at least one step");
    }
    GateSequence seq;
    seq.qubits = coeffs.qubits;
    // std::map iterates in canonical label order.
    for (size_t round = 0; round < steps; round++) {
        for (const auto &[label, alpha] : coeffs.alpha) {
            if (alpha != 0) {
                seq.gates.push_back(basis_gate(label, alpha / (double)steps, coeffs.qubits));
            }
        }
    }
    seq.measure_error(expm_hermitian(coeffs.hamiltonian(), 1.0), mode);
    return seq;
}

double reduced_angle(uint64_t power, double angle) {
    return std::remainder((double)power * angle, TWO_PI);
}

PowerResult irrational_power(double angle, double tolerance, const PowerOptions &options) {
    if (!(tolerance > 0)) {
        throw std::invalid_argument("irrational_power needs a positive tolerance");
    }
    if (!std::isfinite(angle)) {
        throw std::invalid_argument("irrational_power needs a finite angle");
    }
    auto hits = [&](uint64_t n) {
        return std::abs(reduced_angle(n, angle)) < tolerance;
    };
    // The first N with |N·angle mod 2π| < tolerance beats every smaller N, so it is a best
    // approximation of the second kind of angle/2π, hence a convergent denominator.
    double x = angle / TWO_PI;
    x -= std::floor(x);
    uint64_t q_prev = 0;
    uint64_t q = 1;
    double rest = x;
    for (int term = 0; term < 64 && q <= options.max_power; term++) {
        if (hits(q)) {
            return {q, reduced_angle(q, angle)};
        }
        double frac = rest - std::floor(rest);
        if (frac < 1e-15) {
            break;
        }
        rest = 1 / frac;
        auto a = (uint64_t)std::floor(rest);
        if (a == 0 || (double)a > (double)options.max_power) {
            break;
        }
        uint64_t next = a * q + q_prev;
        q_prev = q;
        q = next;
    }
    // Floating-point convergents ran out; scan.
    for (uint64_t n = 1; n <= options.max_power; n++) {
        if (hits(n)) {
            return {n, reduced_angle(n, angle)};
        }
    }
    throw CapExceeded("no power up to " + std::to_string(options.max_power) + " brings the angle within tolerance");
}

GateSetReport twoqubit_gateset(size_t n) {
    if (n < 2) {
        throw std::invalid_argument("the two-qubit gate set needs n >= 2 qubits, got " + std::to_string(n));
    }
    GateSetReport report{n, note1_set(2 * n), {}, {}};
    for (const auto &e : report.set.elements()) {
        PauliFactorization f = factorize_pauli_string(represent(e, n));
        auto support = f.support();
        if (support.size() > 2 || (support.size() == 2 && support[1] != support[0] + 1)) {
            report.local = false;
        }
        report.factorizations.push_back(std::move(f));
        report.supports.push_back(std::move(support));
    }
    ClosureResult closure = close(report.set);
    report.closure_dimension = closure.dimension();
    report.universal = is_universal(closure);
    return report;
}

GateSequence synthesize(const ComplexMatrix &h, size_t steps, double tolerance) {
    size_t n = qubit_count(h);
    CoefficientVector coeffs{n, {}};
    for (const auto &[label, alpha] : decompose(h, tolerance)) {
        if (std::abs(alpha) >= DROP_BELOW) {
            coeffs.alpha.emplace(label, alpha);
        }
    }
    GateSequence seq = trotter(coeffs, steps);
    seq.measure_error(expm_hermitian(h, 1.0, tolerance));
    return seq;
}

}  // namespace cliffgate
