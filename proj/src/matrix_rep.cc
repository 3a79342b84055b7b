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

#include "cliffgate/matrix_rep.h"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace cliffgate {

namespace {

constexpr Complex I_UNIT{0, 1};

Complex phase_value(Phase p) {
    static constexpr Complex VALUES[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return VALUES[p.m];
}

Complex coefficient_value(const Coefficient &c) {
    return phase_value(c.phase) * std::ldexp(1.0, c.pow2);
}

void require_qubits(size_t n) {
    if (n == 0 || n > MAX_DENSE_QUBITS) {
        throw std::invalid_argument(
            "qubit count " + std::to_string(n) + " outside [1, " + std::to_string(MAX_DENSE_QUBITS) + "]");
    }
}

void require_ambient(const ScaledElement &element, size_t n) {
    if (element.ambient() != 2 * n) {
        throw std::invalid_argument(
            "element " + element.str() + " has ambient " + std::to_string(element.ambient()) + ", expected " +
            std::to_string(2 * n) + " for " + std::to_string(n) + " qubits");
    }
}

/// P·Q = i^m R for single-qubit Paulis.
std::pair<Pauli, Phase> multiply(Pauli p, Pauli q) {
    if (p == Pauli::I) {
        return {q, Phase(0)};
    }
    if (q == Pauli::I) {
        return {p, Phase(0)};
    }
    if (p == q) {
        return {Pauli::I, Phase(0)};
    }
    // X·Y = iZ, Y·Z = iX, Z·X = iY; reversed order gives -i.
    int a = (int)p;
    int b = (int)q;
    auto r = (Pauli)(6 - a - b);
    bool cyclic = (b - a + 3) % 3 == 1;
    return {r, Phase(cyclic ? 1 : 3)};
}

char pauli_char(Pauli p) {
    return "IXYZ"[(int)p];
}

}  // namespace

ComplexMatrix pauli_matrix(Pauli p) {
    ComplexMatrix m(2, 2);
    switch (p) {
        case Pauli::I:
            m << 1, 0, 0, 1;
            break;
        case Pauli::X:
            m << 0, 1, 1, 0;
            break;
        case Pauli::Y:
            m << 0, -I_UNIT, I_UNIT, 0;
            break;
        case Pauli::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

ComplexMatrix identity(size_t n) {
    return ComplexMatrix::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix result(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); r++) {
        for (Eigen::Index c = 0; c < a.cols(); c++) {
            result.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return result;
}

size_t qubit_count(const ComplexMatrix &m) {
    if (m.rows() != m.cols() || m.rows() < 2 || (m.rows() & (m.rows() - 1)) != 0) {
        throw std::invalid_argument(
            "expected a square 2^n x 2^n matrix, got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    return (size_t)std::countr_zero((uint64_t)m.rows());
}

ComplexMatrix gamma(size_t k, size_t n) {
    require_qubits(n);
    if (k >= 2 * n) {
        throw std::invalid_argument(
            "gamma index " + std::to_string(k) + " out of range for " + std::to_string(n) + " qubits");
    }
    size_t qubit = k / 2;
    ComplexMatrix result = identity(n - qubit - 1);
    result = kron(result, pauli_matrix(k % 2 == 0 ? Pauli::X : Pauli::Y));
    for (size_t j = 0; j < qubit; j++) {
        result = kron(result, pauli_matrix(Pauli::Z));
    }
    return result;
}

ComplexMatrix represent(const ScaledElement &element, size_t n) {
    require_qubits(n);
    require_ambient(element, n);
    if (element.is_zero()) {
        return ComplexMatrix::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
    }
    ComplexMatrix result = identity(n);
    for (size_t k : element.label().indices()) {
        result = result * gamma(k, n);
    }
    return coefficient_value(element.coefficient()) * result;
}

std::vector<ComplexMatrix> recursive_construct(size_t n) {
    require_qubits(n);
    std::vector<ComplexMatrix> gens{pauli_matrix(Pauli::X), pauli_matrix(Pauli::Y)};
    // ẽ_{01} = i σ_x σ_y.
    const ComplexMatrix e01 = I_UNIT * pauli_matrix(Pauli::X) * pauli_matrix(Pauli::Y);
    for (size_t level = 1; level < n; level++) {
        ComplexMatrix unit = identity(level);
        std::vector<ComplexMatrix> next{kron(unit, pauli_matrix(Pauli::X)), kron(unit, pauli_matrix(Pauli::Y))};
        for (const auto &g : gens) {
            next.push_back(kron(g, e01));
        }
        gens = std::move(next);
    }
    return gens;
}

std::vector<size_t> PauliFactorization::support() const {
    std::vector<size_t> result;
    for (size_t q = 0; q < factors.size(); q++) {
        if (factors[q] != Pauli::I) {
            result.push_back(q);
        }
    }
    return result;
}

std::string PauliFactorization::str() const {
    static constexpr const char *PREFIX[] = {"+", "+i*", "-", "-i*"};
    std::string result = PREFIX[phase.m];
    for (size_t q = factors.size(); q-- > 0;) {
        result += pauli_char(factors[q]);
    }
    return result;
}

uint64_t PauliFactorization::flip_mask() const {
    uint64_t x = 0;
    for (size_t q = 0; q < factors.size(); q++) {
        if (factors[q] == Pauli::X || factors[q] == Pauli::Y) {
            x |= uint64_t{1} << q;
        }
    }
    return x;
}

std::vector<Complex> PauliFactorization::column_amplitudes() const {
    size_t dim = size_t{1} << factors.size();
    std::vector<Complex> amps(dim, phase_value(phase));
    for (size_t q = 0; q < factors.size(); q++) {
        // Amplitude of the single-qubit factor on |0> and |1>.
        Complex on0 = 1;
        Complex on1 = 1;
        switch (factors[q]) {
            case Pauli::I:
            case Pauli::X:
                continue;
            case Pauli::Y:
                on0 = I_UNIT;
                on1 = -I_UNIT;
                break;
            case Pauli::Z:
                on1 = -1;
                break;
        }
        for (size_t c = 0; c < dim; c++) {
            amps[c] *= ((c >> q) & 1) ? on1 : on0;
        }
    }
    return amps;
}

ComplexMatrix PauliFactorization::matrix() const {
    size_t dim = size_t{1} << factors.size();
    ComplexMatrix m = ComplexMatrix::Zero((Eigen::Index)dim, (Eigen::Index)dim);
    uint64_t x = flip_mask();
    auto amps = column_amplitudes();
    for (size_t c = 0; c < dim; c++) {
        m((Eigen::Index)(c ^ x), (Eigen::Index)c) = amps[c];
    }
    return m;
}

PauliFactorization pauli_factorization(const ScaledElement &element, size_t n) {
    require_ambient(element, n);
    if (element.is_zero() || element.coefficient().pow2 != 0) {
        throw std::invalid_argument("Pauli factorization needs a unit-modulus coefficient, got " + element.str());
    }
    PauliFactorization result{std::vector<Pauli>(n, Pauli::I), element.coefficient().phase};
    for (size_t k : element.label().indices()) {
        // Γ_k: σ_x or σ_y on qubit k/2, σ_z on every lower qubit.
        size_t qubit = k / 2;
        for (size_t q = 0; q <= qubit; q++) {
            Pauli g = q < qubit ? Pauli::Z : (k % 2 == 0 ? Pauli::X : Pauli::Y);
            auto [p, phase] = multiply(result.factors[q], g);
            result.factors[q] = p;
            result.phase = result.phase * phase;
        }
    }
    return result;
}

PauliFactorization factorize_pauli_string(const ComplexMatrix &m, double tolerance) {
    size_t n = qubit_count(m);
    auto dim = (size_t)m.rows();
    size_t x = dim;
    for (size_t r = 0; r < dim; r++) {
        if (std::abs(m((Eigen::Index)r, 0)) > 0.5) {
            x = r;
            break;
        }
    }
    if (x == dim) {
        throw std::invalid_argument("matrix is not a Pauli string: column 0 is empty");
    }
    Complex amp0 = m((Eigen::Index)x, 0);
    PauliFactorization result{std::vector<Pauli>(n, Pauli::I), Phase(0)};
    size_t ys = 0;
    for (size_t q = 0; q < n; q++) {
        size_t c = size_t{1} << q;
        Complex ratio = m((Eigen::Index)(c ^ x), (Eigen::Index)c) / amp0;
        bool flips = (x >> q) & 1;
        bool sign = std::abs(ratio + 1.0) < 0.5;
        result.factors[q] = flips ? (sign ? Pauli::Y : Pauli::X) : (sign ? Pauli::Z : Pauli::I);
        ys += result.factors[q] == Pauli::Y;
    }
    Complex global = amp0 / phase_value(Phase((int)ys));
    bool found = false;
    for (int p = 0; p < 4; p++) {
        if (std::abs(global - phase_value(Phase(p))) < 0.5) {
            result.phase = Phase(p);
            found = true;
        }
    }
    if (!found || max_abs_difference(result.matrix(), m) > tolerance) {
        throw std::invalid_argument("matrix is not a unit-phase Pauli string");
    }
    return result;
}

std::vector<size_t> pauli_support(const ScaledElement &element, size_t n) {
    if (element.is_zero()) {
        throw std::invalid_argument("zero element has no Pauli support");
    }
    ScaledElement unit_modulus{{element.coefficient().phase, 0}, element.label()};
    return factorize_pauli_string(represent(unit_modulus, n)).support();
}

double hermitian_defect(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) {
        return INFINITY;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const ComplexMatrix &u) {
    return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

double operator_norm(const ComplexMatrix &m) {
    if (m.size() == 0) {
        return 0;
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
}

double max_abs_difference(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix shape mismatch");
    }
    return (a - b).cwiseAbs().maxCoeff();
}

double operator_distance(const ComplexMatrix &a, const ComplexMatrix &b, PhaseMode mode) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix shape mismatch");
    }
    if (mode == PhaseMode::Sensitive) {
        return operator_norm(a - b);
    }
    auto at = [&](double phi) {
        return operator_norm(a - std::polar(1.0, phi) * b);
    };
    // Coarse scan, then golden-section refinement around the best grid point.
    constexpr int GRID = 128;
    constexpr double STEP = 2 * std::numbers::pi / GRID;
    double best_phi = 0;
    double best = at(0);
    for (int k = 1; k < GRID; k++) {
        double v = at(k * STEP);
        if (v < best) {
            best = v;
            best_phi = k * STEP;
        }
    }
    const double ratio = (std::sqrt(5.0) - 1) / 2;
    double lo = best_phi - STEP;
    double hi = best_phi + STEP;
    for (int iter = 0; iter < 80; iter++) {
        double m1 = hi - ratio * (hi - lo);
        double m2 = lo + ratio * (hi - lo);
        if (at(m1) < at(m2)) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    return std::min(best, at((lo + hi) / 2));
}

std::map<BasisLabel, double> decompose(const ComplexMatrix &h, double tolerance) {
    size_t n = qubit_count(h);
    require_qubits(n);
    double defect = hermitian_defect(h);
    if (defect > tolerance) {
        std::ostringstream msg;
        msg << "matrix is not Hermitian (max |H - H^dagger| = " << defect << ")";
        throw std::invalid_argument(msg.str());
    }
    size_t ambient = 2 * n;
    size_t dim = size_t{1} << n;
    std::map<BasisLabel, double> result;
    for (uint64_t bits = 0; bits < (uint64_t{1} << ambient); bits++) {
        BasisLabel label(bits, ambient);
        PauliFactorization p = pauli_factorization(hermitize(label), n);
        uint64_t x = p.flip_mask();
        auto amps = p.column_amplitudes();
        // tr(H P) = Σ_c H[c, c^x] · amp(c).
        Complex trace = 0;
        for (size_t c = 0; c < dim; c++) {
            trace += h((Eigen::Index)c, (Eigen::Index)(c ^ x)) * amps[c];
        }
        result.emplace(label, trace.real() / (double)dim);
    }
    return result;
}

ComplexMatrix reconstruct(const std::map<BasisLabel, double> &coefficients, size_t n) {
    require_qubits(n);
    ComplexMatrix result = ComplexMatrix::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
    for (const auto &[label, alpha] : coefficients) {
        if (alpha != 0) {
            result += alpha * pauli_factorization(hermitize(label), n).matrix();
        }
    }
    return result;
}

ComplexMatrix expm_hermitian(const ComplexMatrix &h, double tau, double tolerance) {
    double defect = hermitian_defect(h);
    if (defect > tolerance) {
        std::ostringstream msg;
        msg << "expm_hermitian: matrix is not Hermitian (max |H - H^dagger| = " << defect << ")";
        throw std::invalid_argument(msg.str());
    }
    Eigen::MatrixXcd sym = (h + h.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("expm_hermitian: eigendecomposition failed");
    }
    Eigen::VectorXcd phases = (I_UNIT * tau * solver.eigenvalues().cast<Complex>()).array().exp();
    return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

std::string format_matrix(const ComplexMatrix &m) {
    std::string out;
    char buf[64];
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            // Adding +0.0 turns -0 into 0.
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g", m(r, c).real() + 0.0, m(r, c).imag() + 0.0);
            if (c > 0) {
                out += ' ';
            }
            out += buf;
        }
        out += '\n';
    }
    return out;
}

ComplexMatrix parse_matrix(std::string_view text) {
    std::vector<std::vector<Complex>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_number = 0;
    while (std::getline(in, line)) {
        line_number++;
        std::istringstream tokens(line);
        std::string token;
        std::vector<Complex> row;
        while (tokens >> token) {
            size_t comma = token.find(',');
            double re = 0;
            double im = 0;
            const char *begin = token.data();
            const char *end = token.data() + token.size();
            bool ok = comma != std::string::npos;
            if (ok) {
                auto r1 = std::from_chars(begin, begin + comma, re);
                auto r2 = std::from_chars(begin + comma + 1, end, im);
                ok = r1.ec == std::errc() && r1.ptr == begin + comma && r2.ec == std::errc() && r2.ptr == end;
            }
            if (!ok) {
                throw std::invalid_argument(
                    "matrix line " + std::to_string(line_number) + ": bad entry '" + token + "', expected re,im");
            }
            row.emplace_back(re, im);
        }
        if (!row.empty()) {
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) {
        throw std::invalid_argument("matrix text is empty");
    }
    ComplexMatrix m((Eigen::Index)rows.size(), (Eigen::Index)rows[0].size());
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != rows[0].size()) {
            throw std::invalid_argument(
                "matrix row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) + " entries, expected " +
                std::to_string(rows[0].size()));
        }
        for (size_t c = 0; c < rows[r].size(); c++) {
            m((Eigen::Index)r, (Eigen::Index)c) = rows[r][c];
        }
    }
    qubit_count(m);
    return m;
}

ExponentComparison compare_exponents(Pauli alpha, Pauli beta, double angle) {
    ComplexMatrix one = pauli_matrix(Pauli::I);
    ComplexMatrix a1 = kron(pauli_matrix(alpha), one);
    ComplexMatrix b1 = kron(one, pauli_matrix(beta));
    ComplexMatrix ab = kron(pauli_matrix(alpha), pauli_matrix(beta));

    std::string sa(1, pauli_char(alpha));
    std::string sb(1, pauli_char(beta));
    ExponentComparison out{alpha, beta, angle, {}, {}, {}};
    out.names = {
        "exp(i*t*" + sa + "(x)I)",
        "exp(i*t*(" + sa + "(x)I+I(x)" + sb + "))",
        "exp(i*t*" + sa + "(x)" + sb + ")",
        "i*" + sa + "(x)" + sb,
    };
    out.matrices = {
        expm_hermitian(a1, angle),
        expm_hermitian(a1 + b1, angle),
        expm_hermitian(ab, angle),
        I_UNIT * ab,
    };
    size_t k = out.matrices.size();
    out.coincide.assign(k, std::vector<bool>(k, false));
    for (size_t a = 0; a < k; a++) {
        for (size_t b = 0; b < k; b++) {
            out.coincide[a][b] = max_abs_difference(out.matrices[a], out.matrices[b]) < 1e-12;
        }
    }
    return out;
}

std::string ExponentComparison::str() const {
    std::ostringstream out;
    out << "t = " << angle << "\n";
    for (size_t a = 0; a < names.size(); a++) {
        out << names[a] << " coincides with:";
        bool any = false;
        for (size_t b = 0; b < names.size(); b++) {
            if (a != b && coincide[a][b]) {
                out << " " << names[b];
                any = true;
            }
        }
        out << (any ? "" : " (none)") << "\n";
    }
    return out.str();
}

}  // namespace cliffgate
