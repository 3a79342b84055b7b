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

#include <gtest/gtest.h>

namespace cliffgate {
namespace {

TEST(OracleSuite, ExhaustiveSmall) {
    for (size_t n = 1; n <= 3; n++) {
        auto report = run_oracle_suite(n);
        EXPECT_TRUE(report.exhaustive);
        EXPECT_TRUE(report.all_passed()) << "n=" << n;
        EXPECT_GE(report.checks.size(), 7u);
        for (const auto &check : report.checks) {
            EXPECT_TRUE(check.passed) << check.name << " deviation " << check.max_deviation;
            EXPECT_GT(check.cases, 0u) << check.name;
        }
    }
}

TEST(OracleSuite, SampledLarger) {
    auto report = run_oracle_suite(4, {.samples = 256, .seed = 17});
    EXPECT_FALSE(report.exhaustive);
    EXPECT_TRUE(report.all_passed());
}

TEST(OracleSuite, DeterministicForSeed) {
    OracleOptions options{.exhaustive_max_qubits = 1, .samples = 64, .seed = 5};
    auto a = run_oracle_suite(2, options);
    auto b = run_oracle_suite(2, options);
    ASSERT_EQ(a.checks.size(), b.checks.size());
    for (size_t k = 0; k < a.checks.size(); k++) {
        EXPECT_EQ(a.checks[k].max_deviation, b.checks[k].max_deviation);
        EXPECT_EQ(a.checks[k].cases, b.checks[k].cases);
    }
}

TEST(Replay, CertificateInMatrices) {
    auto cert = certificate(theorem1_set(6), BasisLabel::from_indices({1, 3, 4, 5}, 6));
    EXPECT_LT(replay_in_matrices(cert, 3), 1e-10);
    cert.scalar = Coefficient{Phase(2), cert.scalar.pow2};
    EXPECT_GT(replay_in_matrices(cert, 3), 1.0);
    EXPECT_THROW(replay_in_matrices(cert, 2), std::invalid_argument);
}

}  // namespace
}  // namespace cliffgate
