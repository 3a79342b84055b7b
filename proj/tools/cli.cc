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

#include "cli.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "cliffgate/closure.h"
#include "cliffgate/matrix_rep.h"
#include "cliffgate/oracle.h"
#include "cliffgate/synthesis.h"
#include "json.hpp"

namespace cliffgate::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    size_t ambient = 0;
    size_t qubits = 0;
    double tolerance = 1e-10;
    uint64_t seed = 0;
    std::string format = "human";
    size_t threads = 1;
    size_t matrix_cap = 6;
    size_t max_labels = size_t{1} << 22;

    bool records() const {
        return format == "records";
    }
    ClosureOptions closure_options() const {
        return {threads, max_labels};
    }
};

std::string short_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void add_common_options(CLI::App *cmd, RunConfig &cfg) {
    cmd->add_option("--tolerance", cfg.tolerance, "Numerical tolerance for checks")->check(CLI::PositiveNumber);
    cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"human", "records"}));
    cmd->add_option("--threads", cfg.threads, "Worker threads for closure sweeps")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", cfg.seed, "Seed for sampled sweeps");
    cmd->add_option("--cap", cfg.matrix_cap, "Largest qubit count for dense matrices")
        ->check(CLI::Range(size_t{1}, MAX_DENSE_QUBITS));
    cmd->add_option("--max-labels", cfg.max_labels, "Abort closures larger than this")->check(CLI::PositiveNumber);
}

ScaledElement parse_generator(const std::string &text, size_t ambient, const std::string &where) {
    try {
        return parse_element(text, ambient);
    } catch (const ParseError &ex) {
        throw UsageError(where + ", " + ex.what());
    }
}

GeneratorSet read_generators(
    const std::vector<std::string> &tokens, const std::string &file, const RunConfig &cfg) {
    if (cfg.ambient == 0 || cfg.ambient > MAX_AMBIENT) {
        throw UsageError("--ambient must be in [1, " + std::to_string(MAX_AMBIENT) + "]");
    }
    std::vector<ScaledElement> elements;
    for (size_t k = 0; k < tokens.size(); k++) {
        elements.push_back(parse_generator(tokens[k], cfg.ambient, "generator " + std::to_string(k + 1)));
    }
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) {
            throw UsageError("cannot open generator file " + file);
        }
        std::string line;
        for (size_t line_number = 1; std::getline(in, line); line_number++) {
            std::istringstream fields(line);
            std::string token;
            while (fields >> token) {
                elements.push_back(
                    parse_generator(token, cfg.ambient, file + ":" + std::to_string(line_number)));
            }
        }
    }
    if (elements.empty()) {
        throw UsageError("no generators given");
    }
    try {
        return GeneratorSet(cfg.ambient, std::move(elements));
    } catch (const std::invalid_argument &ex) {
        throw UsageError(ex.what());
    }
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void cmd_closure(const GeneratorSet &gens, const RunConfig &cfg, size_t list_max, std::ostream &out) {
    ClosureResult closure = close(gens, cfg.closure_options());
    bool even = gens.ambient() % 2 == 0;
    bool universal = even && is_universal(closure);
    std::vector<BasisLabel> labels = closure.labels();
    if (cfg.records()) {
        json rec{{"command", "closure"}, {"ambient", gens.ambient()}, {"dim", closure.dimension()}};
        rec["universal"] = even ? json(universal) : json(nullptr);
        rec["max_depth"] = closure.entries().back().depth;
        json list = json::array();
        for (const auto &l : labels) {
            list.push_back(l.str());
        }
        rec["labels"] = list;
        out << rec.dump() << "\n";
        return;
    }
    out << "dim=" << closure.dimension() << " universal=" << (even ? (universal ? "true" : "false") : "n/a")
        << "\n";
    if (labels.size() > list_max) {
        out << "labels: (" << labels.size() << " labels, listing suppressed above " << list_max << ")\n";
        return;
    }
    out << "labels:";
    for (const auto &l : labels) {
        out << " " << l.str();
    }
    out << "\n";
}

void cmd_certify(const GeneratorSet &gens, const std::string &target_text, const RunConfig &cfg, std::ostream &out) {
    ScaledElement target = parse_generator(target_text, gens.ambient(), "target");
    if (target.is_zero()) {
        throw UsageError("target must be a basis label");
    }
    Certificate cert = certificate(gens, target.label(), cfg.closure_options());
    cert.replay();

    std::optional<double> deviation;
    size_t n = gens.ambient() / 2;
    bool replayable = gens.ambient() % 2 == 0 && n <= cfg.matrix_cap;
    if (replayable) {
        deviation = replay_in_matrices(cert, n);
    }
    bool passed = !deviation || *deviation <= cfg.tolerance;

    if (cfg.records()) {
        json rec{{"command", "certify"}, {"ambient", gens.ambient()}, {"target", target.label().str()}};
        rec["steps"] = cert.steps.size();
        rec["certificate"] = cert.str();
        rec["replayed"] = replayable;
        rec["max_deviation"] = deviation ? json(*deviation) : json(nullptr);
        rec["passed"] = passed;
        out << rec.dump() << "\n";
    } else {
        out << cert.str();
        if (deviation) {
            out << "replay max_deviation=" << short_number(*deviation) << " verdict=" << (passed ? "pass" : "FAIL")
                << "\n";
        } else {
            out << "replay skipped: dense oracle needs an even ambient with n <= " << cfg.matrix_cap << "\n";
        }
    }
    if (!passed) {
        throw VerificationFailure("certificate replay deviates by " + short_number(*deviation));
    }
}

void cmd_verify_rep(const RunConfig &cfg, std::ostream &out) {
    if (cfg.qubits == 0) {
        throw UsageError("--qubits must be at least 1");
    }
    if (cfg.qubits > cfg.matrix_cap) {
        throw CapExceeded(
            "n = " + std::to_string(cfg.qubits) + " exceeds the dense matrix cap " + std::to_string(cfg.matrix_cap) +
            " (raise with --cap)");
    }
    OracleOptions options;
    options.seed = cfg.seed;
    OracleReport report = run_oracle_suite(cfg.qubits, options);
    if (cfg.records()) {
        json rec{{"command", "verify-rep"}, {"n", report.n}, {"exhaustive", report.exhaustive}};
        json checks = json::array();
        for (const auto &c : report.checks) {
            checks.push_back(
                {{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"max_deviation", c.max_deviation}});
        }
        rec["checks"] = checks;
        rec["passed"] = report.all_passed();
        out << rec.dump() << "\n";
    } else {
        out << "n=" << report.n << " mode=" << (report.exhaustive ? "exhaustive" : "sampled") << "\n";
        for (const auto &c : report.checks) {
            out << c.name << " " << (c.passed ? "pass" : "FAIL") << " cases=" << c.cases
                << " max_deviation=" << short_number(c.max_deviation) << "\n";
        }
    }
    if (!report.all_passed()) {
        throw VerificationFailure("representation oracle failed");
    }
}

void cmd_gateset(const RunConfig &cfg, std::ostream &out) {
    if (cfg.qubits < 2) {
        throw PreconditionError("gateset needs --qubits >= 2, got " + std::to_string(cfg.qubits));
    }
    if (cfg.qubits > cfg.matrix_cap) {
        throw CapExceeded("n = " + std::to_string(cfg.qubits) + " exceeds the dense matrix cap");
    }
    GateSetReport report = twoqubit_gateset(cfg.qubits);
    const auto &elements = report.set.elements();
    if (cfg.records()) {
        json rec{{"command", "gateset"}, {"n", report.qubits}};
        json items = json::array();
        for (size_t k = 0; k < elements.size(); k++) {
            items.push_back(
                {{"element", elements[k].str()},
                 {"pauli", report.factorizations[k].str()},
                 {"support", report.supports[k]}});
        }
        rec["elements"] = items;
        rec["local"] = report.local;
        rec["closure_dim"] = report.closure_dimension;
        rec["universal"] = report.universal;
        out << rec.dump() << "\n";
        return;
    }
    for (size_t k = 0; k < elements.size(); k++) {
        out << elements[k].str() << " " << report.factorizations[k].str() << " support={";
        for (size_t j = 0; j < report.supports[k].size(); j++) {
            out << (j ? "," : "") << report.supports[k][j];
        }
        out << "}\n";
    }
    out << "closure dim=" << report.closure_dimension << " universal=" << (report.universal ? "true" : "false")
        << " local=" << (report.local ? "true" : "false") << "\n";
}

void cmd_synth(
    const std::string &input, const std::string &output, size_t steps, int sign, const RunConfig &cfg,
    std::ostream &out) {
    ComplexMatrix h;
    try {
        h = parse_matrix(read_file(input));
    } catch (const std::invalid_argument &ex) {
        throw UsageError(input + ": " + ex.what());
    }
    size_t n = qubit_count(h);
    if (cfg.qubits != 0 && cfg.qubits != n) {
        throw PreconditionError(
            "matrix is " + std::to_string(h.rows()) + "x" + std::to_string(h.cols()) + " but --qubits is " +
            std::to_string(cfg.qubits));
    }
    if (n > cfg.matrix_cap) {
        throw CapExceeded("n = " + std::to_string(n) + " exceeds the dense matrix cap");
    }
    if (sign < 0) {
        h = -h;
    }
    GateSequence seq = synthesize(h, steps, cfg.tolerance);
    if (!output.empty()) {
        std::ofstream file(output);
        if (!file) {
            throw UsageError("cannot write " + output);
        }
        file << seq.str();
    }
    if (cfg.records()) {
        json rec{{"command", "synth"}, {"n", n}, {"steps", steps}, {"gates", seq.gates.size()}};
        rec["error"] = *seq.error;
        if (output.empty()) {
            rec["sequence"] = seq.str();
        }
        out << rec.dump() << "\n";
        return;
    }
    if (output.empty()) {
        out << seq.str();
    }
    out << "gates=" << seq.gates.size() << " error=" << short_number(*seq.error) << "\n";
}

void cmd_power(double angle, double epsilon, uint64_t max_power, const RunConfig &cfg, std::ostream &out) {
    if (!(epsilon > 0)) {
        throw UsageError("--epsilon must be positive");
    }
    PowerResult r = irrational_power(angle, epsilon, {max_power});
    if (cfg.records()) {
        json rec{{"command", "power"}, {"angle", angle}, {"epsilon", epsilon}};
        rec["N"] = r.power;
        rec["residual"] = r.residual;
        out << rec.dump() << "\n";
        return;
    }
    out << "N=" << r.power << " residual=" << short_number(r.residual) << "\n";
}

Pauli parse_pauli(const std::string &s) {
    if (s == "x" || s == "X") {
        return Pauli::X;
    }
    if (s == "y" || s == "Y") {
        return Pauli::Y;
    }
    if (s == "z" || s == "Z") {
        return Pauli::Z;
    }
    throw UsageError("expected a Pauli name x, y or z, got '" + s + "'");
}

void cmd_exponents(const std::string &alpha, const std::string &beta, double angle, const RunConfig &cfg, std::ostream &out) {
    ExponentComparison cmp = compare_exponents(parse_pauli(alpha), parse_pauli(beta), angle);
    if (cfg.records()) {
        json rec{{"command", "exponents"}, {"angle", angle}, {"names", cmp.names}};
        json pairs = json::array();
        for (size_t a = 0; a < cmp.names.size(); a++) {
            for (size_t b = a + 1; b < cmp.names.size(); b++) {
                if (cmp.coincide[a][b]) {
                    pairs.push_back({cmp.names[a], cmp.names[b]});
                }
            }
        }
        rec["coinciding"] = pairs;
        out << rec.dump() << "\n";
        return;
    }
    out << cmp.str();
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Clifford-algebra closure, certification and gate synthesis", "cliffgate"};
    app.require_subcommand(1);
    RunConfig cfg;

    std::vector<std::string> generators;
    std::string generator_file;
    size_t list_max = 256;
    auto *closure_cmd = app.add_subcommand("closure", "Lie closure of a generator set");
    closure_cmd->add_option("generators", generators, "Generator labels, e.g. e[0] i*e[0,1,2]");
    closure_cmd->add_option("--generators-file", generator_file, "File with generator labels");
    closure_cmd->add_option("-m,--ambient", cfg.ambient, "Generator count of the algebra")->required();
    closure_cmd->add_option("--list-max", list_max, "Suppress the label list above this size");
    add_common_options(closure_cmd, cfg);

    std::string target;
    auto *certify_cmd = app.add_subcommand("certify", "Commutator certificate for one label");
    certify_cmd->add_option("generators", generators, "Generator labels");
    certify_cmd->add_option("--generators-file", generator_file, "File with generator labels");
    certify_cmd->add_option("-m,--ambient", cfg.ambient, "Generator count of the algebra")->required();
    certify_cmd->add_option("-t,--target", target, "Target label, e.g. e[0,1,2,3]")->required();
    add_common_options(certify_cmd, cfg);

    auto *verify_cmd = app.add_subcommand("verify-rep", "Check the dense representation against the symbolic algebra");
    verify_cmd->add_option("-n,--qubits", cfg.qubits, "Qubit count")->required();
    add_common_options(verify_cmd, cfg);

    auto *gateset_cmd = app.add_subcommand("gateset", "The one- and two-qubit universal gate set");
    gateset_cmd->add_option("-n,--qubits", cfg.qubits, "Qubit count")->required();
    add_common_options(gateset_cmd, cfg);

    std::string input;
    std::string output;
    size_t steps = 1;
    int sign = 1;
    auto *synth_cmd = app.add_subcommand("synth", "Product-formula synthesis of exp(iH)");
    synth_cmd->add_option("-i,--input", input, "Hermitian matrix file")->required();
    synth_cmd->add_option("-o,--output", output, "Write the gate sequence here");
    synth_cmd->add_option("-N,--steps", steps, "Product-formula repetitions")->check(CLI::PositiveNumber);
    synth_cmd->add_option("-n,--qubits", cfg.qubits, "Expected qubit count");
    synth_cmd->add_option("--sign", sign, "Exponent sign: +1 for exp(iH), -1 for exp(-iH)")
        ->check(CLI::IsMember({-1, 1}));
    add_common_options(synth_cmd, cfg);

    double angle = 0;
    double epsilon = 0;
    uint64_t max_power = PowerOptions{}.max_power;
    auto *power_cmd = app.add_subcommand("power", "Smallest power of exp(i*angle*e_I) within epsilon of the identity");
    power_cmd->add_option("--angle", angle, "Gate angle in radians")->required();
    power_cmd->add_option("--epsilon", epsilon, "Target angle tolerance")->required();
    power_cmd->add_option("--max-power", max_power, "Search cap");
    add_common_options(power_cmd, cfg);

    std::string alpha = "x";
    std::string beta = "z";
    double exp_angle = 3.141592653589793;
    auto *exponents_cmd = app.add_subcommand("exponents", "Compare exponentials of two-qubit Pauli products");
    exponents_cmd->add_option("--alpha", alpha, "Pauli on the high qubit");
    exponents_cmd->add_option("--beta", beta, "Pauli on the low qubit");
    exponents_cmd->add_option("--angle", exp_angle, "Exponent angle");
    add_common_options(exponents_cmd, cfg);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? OK : USAGE_ERROR;
    }

    try {
        if (closure_cmd->parsed()) {
            cmd_closure(read_generators(generators, generator_file, cfg), cfg, list_max, out);
        } else if (certify_cmd->parsed()) {
            cmd_certify(read_generators(generators, generator_file, cfg), target, cfg, out);
        } else if (verify_cmd->parsed()) {
            cmd_verify_rep(cfg, out);
        } else if (gateset_cmd->parsed()) {
            cmd_gateset(cfg, out);
        } else if (synth_cmd->parsed()) {
            cmd_synth(input, output, steps, sign, cfg, out);
        } else if (power_cmd->parsed()) {
            cmd_power(angle, epsilon, max_power, cfg, out);
        } else if (exponents_cmd->parsed()) {
            cmd_exponents(alpha, beta, exp_angle, cfg, out);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return USAGE_ERROR;
    } catch (const VerificationFailure &e) {
        err << "verification failed: " << e.what() << "\n";
        return VERIFICATION_FAILED;
    } catch (const CapExceeded &e) {
        err << "cap exceeded: " << e.what() << "\n";
        return CAP_EXCEEDED;
    } catch (const PreconditionError &e) {
        err << "error: " << e.what() << "\n";
        return PRECONDITION_FAILED;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return PRECONDITION_FAILED;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return INTERNAL_ERROR;
    }
    return OK;
}

}  // namespace cliffgate::cli
