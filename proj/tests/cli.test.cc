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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cliffgate/matrix_rep.h"
#include "cliffgate/synthesis.h"
#include "json.hpp"

namespace cliffgate::cli {
namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string &name) {
    std::filesystem::path dir(CLIFFGATE_TEST_TMPDIR);
    std::filesystem::create_directories(dir);
    return dir / name;
}

void write_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream(path) << text;
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TEST(Cli, ClosureGeneratorsOnly) {
    auto r = invoke({"closure", "-m", "4", "e[0]", "e[1]", "e[2]", "e[3]"});
    EXPECT_EQ(r.code, OK);
    EXPECT_EQ(r.out,
              "dim=10 universal=false\n"
              "labels: e[0] e[1] e[2] e[3] e[0,1] e[0,2] e[0,3] e[1,2] e[1,3] e[2,3]\n");
}

TEST(Cli, ClosureWithOrderThree) {
    auto r = invoke({"closure", "-m", "4", "e[0]", "e[1]", "e[2]", "e[3]", "i*e[0,1,2]"});
    EXPECT_EQ(r.code, OK);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "dim=15 universal=true");
}

TEST(Cli, ClosureOddAmbient) {
    auto r = invoke({"closure", "-m", "5", "e[0]", "e[1]", "e[2]", "e[3]", "e[4]", "i*e[0,1,2]"});
    EXPECT_EQ(r.code, OK);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "dim=30 universal=n/a");
}

TEST(Cli, ClosureFromFile) {
    auto path = temp_path("gens.txt");
    write_file(path, "e[0]\ne[1]\n\ne[2]\n");
    auto r = invoke({"closure", "-m", "3", "--generators-file", path.string()});
    EXPECT_EQ(r.code, OK);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "dim=6 universal=n/a");

    write_file(path, "e[0]\ne[1,1]\n");
    r = invoke({"closure", "-m", "3", "--generators-file", path.string()});
    EXPECT_EQ(r.code, USAGE_ERROR);
    EXPECT_NE(r.err.find(path.string() + ":2, column 5"), std::string::npos) << r.err;
}

TEST(Cli, ParseErrorNamesGeneratorAndColumn) {
    auto r = invoke({"closure", "-m", "4", "e[0]", "e[9]"});
    EXPECT_EQ(r.code, USAGE_ERROR);
    EXPECT_NE(r.err.find("generator 2, column 3"), std::string::npos) << r.err;
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).code, USAGE_ERROR);
    EXPECT_EQ(invoke({"bogus"}).code, USAGE_ERROR);
    EXPECT_EQ(invoke({"closure", "e[0]"}).code, USAGE_ERROR);
    EXPECT_EQ(invoke({"closure", "-m", "4", "e[0]", "--format", "xml"}).code, USAGE_ERROR);
    EXPECT_EQ(invoke({"power", "--angle", "1", "--epsilon", "0"}).code, USAGE_ERROR);
    EXPECT_EQ(invoke({"--help"}).code, OK);
}

TEST(Cli, NegativeGeneratorsAfterSeparator) {
    EXPECT_EQ(invoke({"closure", "-m", "4", "--", "e[0]", "-e[1]"}).code, OK);
    auto r = invoke({"closure", "-m", "4", "--", "e[0]", "-e[0]"});
    EXPECT_EQ(r.code, USAGE_ERROR);
    EXPECT_NE(r.err.find("duplicate"), std::string::npos);
}

TEST(Cli, CapExceeded) {
    EXPECT_EQ(invoke({"closure", "-m", "4", "--max-labels", "3", "e[0]", "e[1]", "e[2]", "e[3]"}).code,
              CAP_EXCEEDED);
    EXPECT_EQ(invoke({"power", "--angle", "1", "--epsilon", "1e-9", "--max-power", "10"}).code, CAP_EXCEEDED);
    EXPECT_EQ(invoke({"verify-rep", "-n", "7"}).code, CAP_EXCEEDED);
}

TEST(Cli, Certify) {
    auto r = invoke({"certify", "-m", "4", "-t", "e[0,1,2,3]", "e[0]", "e[1]", "e[2]", "e[3]", "i*e[0,1,2]"});
    EXPECT_EQ(r.code, OK);
    EXPECT_EQ(r.out,
              "certificate ambient=4 target=e[0,1,2,3]\n"
              "given e[3]\n"
              "given i*e[0,1,2]\n"
              "e[0,1,2,3] := [e[3], e[0,1,2]] * -i*2^1\n"
              "scalar -i*2^1\n"
              "replay max_deviation=0 verdict=pass\n");
}

TEST(Cli, CertifyUnreachable) {
    auto r = invoke({"certify", "-m", "4", "-t", "e[0,1,2]", "e[0]", "e[1]", "e[2]", "e[3]"});
    EXPECT_EQ(r.code, PRECONDITION_FAILED);
    EXPECT_NE(r.err.find("closure dimension 10"), std::string::npos) << r.err;
}

TEST(Cli, VerifyRep) {
    auto r = invoke({"verify-rep", "-n", "2"});
    EXPECT_EQ(r.code, OK) << r.out << r.err;
    EXPECT_NE(r.out.find("clifford_relations"), std::string::npos);
}

TEST(Cli, GateSet) {
    auto r = invoke({"gateset", "-n", "2"});
    EXPECT_EQ(r.code, OK);
    EXPECT_NE(r.out.find("e[0] +IX support={0}"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("closure dim=15 universal=true local=true"), std::string::npos) << r.out;
    EXPECT_EQ(invoke({"gateset", "-n", "1"}).code, PRECONDITION_FAILED);
}

TEST(Cli, Power) {
    auto r = invoke({"power", "--angle", "1.5707963267948966", "--epsilon", "0.1"});
    EXPECT_EQ(r.code, OK);
    EXPECT_EQ(r.out, "N=4 residual=0\n");
}

TEST(Cli, Exponents) {
    auto r = invoke({"exponents", "--alpha", "X", "--beta", "Z"});
    EXPECT_EQ(r.code, OK);
    EXPECT_NE(r.out.find("exp(i*t*X(x)I) coincides with: exp(i*t*X(x)Z)"), std::string::npos) << r.out;
    EXPECT_EQ(invoke({"exponents", "--alpha", "Q", "--beta", "Z"}).code, USAGE_ERROR);
}

TEST(Cli, RecordsAreJsonAndDeterministic) {
    std::vector<std::string> args{"closure", "--format", "records", "--threads", "4", "-m", "6",
                                  "e[0]",    "e[1]",     "e[2]",    "e[3]",      "e[4]", "e[5]", "i*e[0,1,2]"};
    auto a = invoke(args);
    auto b = invoke(args);
    args[4] = "1";
    auto c = invoke(args);
    EXPECT_EQ(a.code, OK);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
    auto record = nlohmann::json::parse(a.out);
    EXPECT_EQ(record["dim"], 63);
    EXPECT_EQ(record["universal"], true);
}

TEST(Cli, SynthWritesSequenceFile) {
    auto input = temp_path("h.txt");
    auto output = temp_path("seq.txt");
    ComplexMatrix h = 0.3 * kron(pauli_matrix(Pauli::X), pauli_matrix(Pauli::I)) +
                      0.5 * kron(pauli_matrix(Pauli::Z), pauli_matrix(Pauli::Y));
    write_file(input, format_matrix(h));
    auto r = invoke({"synth", "-i", input.string(), "-o", output.string(), "-N", "8", "--format", "records"});
    ASSERT_EQ(r.code, OK) << r.err;
    auto record = nlohmann::json::parse(r.out);
    EXPECT_EQ(record["gates"], 16);
    auto seq = parse_gate_sequence(read_file(output), 2);
    EXPECT_EQ(seq.gates.size(), 16u);
    ASSERT_TRUE(seq.error.has_value());
    EXPECT_NEAR(*seq.error, operator_distance(seq.realized(), expm_hermitian(h, 1.0)), 1e-12);
    EXPECT_EQ(*seq.error, record["error"].get<double>());
}

TEST(Cli, SynthNegativeSign) {
    auto input = temp_path("h_sign.txt");
    auto output = temp_path("seq_sign.txt");
    ComplexMatrix h = 0.7 * kron(pauli_matrix(Pauli::Y), pauli_matrix(Pauli::Y));
    write_file(input, format_matrix(h));
    ASSERT_EQ(invoke({"synth", "-i", input.string(), "-o", output.string(), "-N", "1", "--sign", "-1"}).code, OK);
    auto seq = parse_gate_sequence(read_file(output), 2);
    EXPECT_LT(max_abs_difference(seq.realized(), expm_hermitian(h, -1.0)), 1e-12);
}

TEST(Cli, SynthBadInput) {
    auto input = temp_path("bad.txt");
    write_file(input, "0,0 1,0\n2,0 0,0\n");
    EXPECT_EQ(invoke({"synth", "-i", input.string()}).code, PRECONDITION_FAILED);
    write_file(input, "0,0 1,0\n");
    EXPECT_EQ(invoke({"synth", "-i", input.string()}).code, USAGE_ERROR);
    write_file(input, format_matrix(identity(2)));
    EXPECT_EQ(invoke({"synth", "-i", input.string(), "-n", "3"}).code, PRECONDITION_FAILED);
    EXPECT_EQ(invoke({"synth", "-i", temp_path("missing.txt").string()}).code, USAGE_ERROR);
}

}  // namespace
}  // namespace cliffgate::cli
