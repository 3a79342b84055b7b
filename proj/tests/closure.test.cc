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

#include "cliffgate/closure.h"

#include <gtest/gtest.h>

#include <random>

#include "brute_force.h"
#include "cliffgate/matrix_rep.h"
#include "cliffgate/oracle.h"

namespace cliffgate {
namespace {

BasisLabel lab(std::vector<size_t> indices, size_t ambient) {
    return BasisLabel::from_indices(indices, ambient);
}

std::vector<uint64_t> bits_of(const GeneratorSet &gens) {
    std::vector<uint64_t> out;
    for (const auto &e : gens.elements()) {
        out.push_back(e.label().bits());
    }
    return out;
}

std::set<uint64_t> reached(const ClosureResult &closure) {
    std::set<uint64_t> out;
    for (const auto &e : closure.entries()) {
        out.insert(e.label().bits());
    }
    return out;
}

TEST(Closure, GeneratorsOnlyDimension) {
    EXPECT_EQ(dimension(generators_only(2)), 3u);
    EXPECT_EQ(dimension(generators_only(4)), 10u);
    EXPECT_EQ(dimension(generators_only(6)), 21u);
    EXPECT_EQ(dimension(generators_only(8)), 36u);
}

TEST(Closure, GeneratorsOnlyReachesOrdersOneAndTwo) {
    auto result = close(generators_only(4));
    for (const auto &label : result.labels()) {
        EXPECT_TRUE(label.order() == 1 || label.order() == 2) << label.str();
    }
}

TEST(Closure, DimensionLawProperty) {
    // m generators give m + m(m-1)/2 = m(m+1)/2 labels.
    for (size_t m = 2; m <= 16; m++) {
        EXPECT_EQ(dimension(generators_only(m)), m * (m + 1) / 2) << m;
    }
}

TEST(Closure, WithOrderThreeReachesEveryNonUnitLabel) {
    EXPECT_EQ(dimension(theorem1_set(4)), 15u);
    EXPECT_EQ(dimension(theorem1_set(6)), 63u);
    EXPECT_EQ(dimension(theorem1_set(8)), 255u);
    auto result = close(theorem1_set(6));
    EXPECT_FALSE(result.contains(BasisLabel::unit(6)));
}

TEST(Closure, UnitLabelIsNeverACommutator) {
    // [Γ_A, Γ_B] ∝ Γ_{A △ B}, and A = B always commutes.
    for (uint64_t a = 0; a < 64; a++) {
        EXPECT_TRUE(commutes(BasisLabel(a, 6), BasisLabel(a, 6)));
    }
}

TEST(Closure, OddAmbientTopLabelUnreachable) {
    auto five = close(theorem1_set(5));
    EXPECT_EQ(five.dimension(), 30u);
    EXPECT_FALSE(five.contains(BasisLabel(0b11111, 5)));
    EXPECT_EQ(dimension(theorem1_set(7)), 126u);
    // The top label commutes with everything at odd ambient.
    for (uint64_t a = 0; a < 32; a++) {
        EXPECT_TRUE(commutes(BasisLabel(0b11111, 5), BasisLabel(a, 5)));
    }
}

TEST(Closure, AgreesWithBruteForceFixpoint) {
    std::mt19937_64 rng(21);
    for (size_t ambient : {3, 4, 5, 6}) {
        for (int trial = 0; trial < 40; trial++) {
            std::set<uint64_t> picks;
            size_t count = 1 + rng() % 4;
            while (picks.size() < count) {
                uint64_t b = brute::random_bits(rng, ambient);
                if (b != 0) {
                    picks.insert(b);
                }
            }
            std::vector<ScaledElement> elements;
            for (uint64_t b : picks) {
                elements.push_back(hermitize(BasisLabel(b, ambient)));
            }
            GeneratorSet gens(ambient, elements);
            auto result = close(gens);
            auto depths = brute::closure_depths(bits_of(gens));
            ASSERT_EQ(reached(result), brute::closure(bits_of(gens)));
            for (const auto &e : result.entries()) {
                ASSERT_EQ(e.depth, depths.at(e.label().bits())) << e.label().str();
            }
        }
    }
}

TEST(Closure, MatrixRankOracle) {
    // Dimension of the real Lie algebra spanned by i·(represented generators) and their
    // nested commutators, computed numerically.
    auto rank_of = [](const GeneratorSet &gens, size_t n) {
        std::vector<brute::Matrix> hs;
        for (const auto &e : gens.elements()) {
            hs.push_back(represent(e, n));
        }
        return brute::lie_rank(hs);
    };
    EXPECT_EQ(rank_of(generators_only(4), 2), dimension(generators_only(4)));
    EXPECT_EQ(rank_of(theorem1_set(4), 2), dimension(theorem1_set(4)));
    EXPECT_EQ(rank_of(theorem1_set(4), 2), 15u);
    EXPECT_EQ(rank_of(note1_set(4), 2), 15u);
    EXPECT_EQ(rank_of(generators_only(6), 3), 21u);
}

TEST(Closure, Idempotent) {
    for (const auto &gens : {generators_only(5), theorem1_set(4), note1_set(6, false)}) {
        auto first = close(gens);
        std::vector<ScaledElement> all;
        for (const auto &e : first.entries()) {
            all.push_back(e.element);
        }
        auto second = close(GeneratorSet(gens.ambient(), all));
        EXPECT_EQ(second.labels(), first.labels());
    }
}

TEST(Closure, MonotoneUnderSubsets) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; trial++) {
        size_t ambient = 6;
        std::set<uint64_t> picks;
        while (picks.size() < 4) {
            uint64_t b = brute::random_bits(rng, ambient);
            if (b != 0) {
                picks.insert(b);
            }
        }
        std::vector<ScaledElement> big;
        for (uint64_t b : picks) {
            big.emplace_back(BasisLabel(b, ambient));
        }
        std::vector<ScaledElement> small(big.begin(), big.begin() + 2);
        auto big_set = reached(close(GeneratorSet(ambient, big)));
        for (uint64_t b : reached(close(GeneratorSet(ambient, small)))) {
            EXPECT_TRUE(big_set.contains(b));
        }
    }
}

TEST(Closure, ClosednessAudit) {
    for (const auto &gens : {generators_only(6), theorem1_set(6), theorem1_set(5), note1_set(4, false)}) {
        EXPECT_TRUE(closedness_audit(close(gens)).empty());
    }
}

TEST(Closure, ParityStructureOfOrderTwoSets) {
    // Generators of order at most 2 only ever reach orders 1 and 2.
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 30; trial++) {
        size_t ambient = 8;
        std::vector<ScaledElement> elements;
        std::set<uint64_t> seen;
        while (elements.size() < 5) {
            size_t i = rng() % ambient;
            size_t j = rng() % ambient;
            uint64_t bits = (uint64_t{1} << i) | (uint64_t{1} << j);
            if (seen.insert(bits).second) {
                elements.push_back(hermitize(BasisLabel(bits, ambient)));
            }
        }
        for (const auto &label : close(GeneratorSet(ambient, elements)).labels()) {
            EXPECT_LE(label.order(), 2u);
            EXPECT_GE(label.order(), 1u);
        }
    }
}

TEST(Closure, DeterministicAcrossThreadCounts) {
    auto one = close(theorem1_set(8), {.threads = 1});
    for (size_t threads : {2, 3, 8}) {
        auto many = close(theorem1_set(8), {.threads = threads});
        ASSERT_EQ(many.dimension(), one.dimension());
        for (size_t k = 0; k < one.dimension(); k++) {
            const auto &a = one.entries()[k];
            const auto &b = many.entries()[k];
            EXPECT_EQ(a.element, b.element);
            EXPECT_EQ(a.depth, b.depth);
            EXPECT_EQ(a.parent_a, b.parent_a);
            EXPECT_EQ(a.parent_b, b.parent_b);
        }
    }
}

TEST(Closure, EntryElementsAreTheRecordedCommutators) {
    auto result = close(theorem1_set(6));
    for (const auto &e : result.entries()) {
        if (e.is_initial()) {
            continue;
        }
        const auto &a = result.entries()[*e.parent_a];
        const auto &b = result.entries()[*e.parent_b];
        EXPECT_EQ(commutator(a.element, b.element), e.element);
        EXPECT_LT(a.label(), b.label());
        EXPECT_EQ(e.depth, std::max(a.depth, b.depth) + 1);
    }
}

TEST(Closure, CapExceeded) {
    EXPECT_THROW(close(theorem1_set(8), {.max_labels = 100}), CapExceeded);
    EXPECT_NO_THROW(close(theorem1_set(8), {.max_labels = 255}));
}

TEST(GeneratorSet, Validation) {
    EXPECT_THROW(GeneratorSet(4, {}), std::invalid_argument);
    EXPECT_THROW(GeneratorSet(4, {ScaledElement::zero(4)}), std::invalid_argument);
    EXPECT_THROW(GeneratorSet(4, {ScaledElement(lab({0}, 2))}), std::invalid_argument);
    EXPECT_THROW(GeneratorSet(4, {ScaledElement(lab({0}, 4)), ScaledElement({Phase(2), 0}, lab({0}, 4))}),
                 std::invalid_argument);
}

TEST(GeneratorSet, NamedSets) {
    EXPECT_EQ(theorem1_set(4).size(), 5u);
    EXPECT_THROW(theorem1_set(2), std::invalid_argument);
    auto chain = note1_set(6);
    ASSERT_EQ(chain.size(), 7u);
    EXPECT_EQ(format_element(chain.elements()[0]), "e[0]");
    EXPECT_EQ(format_element(chain.elements()[1]), "i*e[0,1]");
    EXPECT_EQ(format_element(chain.elements()[5]), "i*e[4,5]");
    EXPECT_EQ(format_element(chain.elements()[6]), "i*e[0,1,2]");
    EXPECT_EQ(note1_set(6, false).size(), 6u);
}

TEST(GeneratorSet, ChainSetDimensions) {
    EXPECT_EQ(dimension(note1_set(4)), 15u);
    EXPECT_EQ(dimension(note1_set(6)), 63u);
    EXPECT_EQ(dimension(note1_set(4, false)), 10u);
}

TEST(Universal, Examples) {
    EXPECT_TRUE(is_universal(theorem1_set(4)));
    EXPECT_TRUE(is_universal(theorem1_set(6)));
    EXPECT_FALSE(is_universal(generators_only(4)));
    EXPECT_FALSE(is_universal(note1_set(4, false)));
    EXPECT_THROW(is_universal(theorem1_set(5)), std::invalid_argument);
    EXPECT_EQ(non_unit_label_count(6), 63u);
}

TEST(Universal, EveryOrderThreeOrFourExtraElement) {
    for (size_t ambient : {4, 6}) {
        for (uint64_t bits = 0; bits < (uint64_t{1} << ambient); bits++) {
            int order = std::popcount(bits);
            if (order != 3 && order != 4) {
                continue;
            }
            auto gens = generators_plus(ambient, hermitize(BasisLabel(bits, ambient)));
            EXPECT_TRUE(is_universal(gens)) << BasisLabel(bits, ambient).str();
        }
    }
}

TEST(Certificate, SingleCommutator) {
    auto cert = certificate(generators_only(4), lab({0, 1}, 4));
    ASSERT_EQ(cert.steps.size(), 1u);
    EXPECT_EQ(cert.steps[0].parent_a, lab({0}, 4));
    EXPECT_EQ(cert.steps[0].parent_b, lab({1}, 4));
    EXPECT_EQ(cert.steps[0].coefficient, (Coefficient{Phase(0), 1}));
    EXPECT_EQ(cert.replay(), hermitize(lab({0, 1}, 4)).scaled(cert.scalar));
}

TEST(Certificate, InitialTargetHasNoSteps) {
    auto cert = certificate(generators_only(4), lab({2}, 4));
    EXPECT_TRUE(cert.steps.empty());
    EXPECT_EQ(cert.scalar, Coefficient{});
}

TEST(Certificate, OrderFourFromOrderThreeAndGenerator) {
    auto cert = certificate(theorem1_set(4), lab({0, 1, 2, 3}, 4));
    ASSERT_EQ(cert.steps.size(), 1u);
    EXPECT_EQ(cert.steps[0].parent_a, lab({3}, 4));
    EXPECT_EQ(cert.steps[0].parent_b, lab({0, 1, 2}, 4));
    // [Γ_3, iΓ_{012}] = 2i Γ_3 Γ_{012} = -2i Γ_{0123}.
    EXPECT_EQ(cert.steps[0].coefficient, (Coefficient{Phase(3), 1}));
    EXPECT_EQ(cert.str(),
              "certificate ambient=4 target=e[0,1,2,3]\n"
              "given e[3]\n"
              "given i*e[0,1,2]\n"
              "e[0,1,2,3] := [e[3], e[0,1,2]] * -i*2^1\n"
              "scalar -i*2^1\n");
}

TEST(Certificate, SoundForEveryReachedLabel) {
    for (size_t ambient : {4, 6}) {
        auto closure = close(theorem1_set(ambient));
        for (const auto &label : closure.labels()) {
            auto cert = certificate(closure, label);
            EXPECT_EQ(cert.replay(), hermitize(label).scaled(cert.scalar));
            EXPECT_LT(replay_in_matrices(cert, ambient / 2), 1e-10) << label.str();
            EXPECT_EQ(cert.steps.size() == 0, closure.at(label).is_initial());
        }
    }
}

TEST(Certificate, UnreachableTargetNamesDimension) {
    try {
        certificate(generators_only(4), lab({0, 1, 2}, 4));
        FAIL() << "expected NotInClosure";
    } catch (const NotInClosure &e) {
        EXPECT_EQ(e.closure_dimension, 10u);
        EXPECT_NE(std::string(e.what()).find("10"), std::string::npos);
    }
    EXPECT_THROW(certificate(theorem1_set(4), BasisLabel::unit(4)), NotInClosure);
}

TEST(Certificate, TextRoundTrip) {
    auto closure = close(theorem1_set(6));
    for (const auto &label : closure.labels()) {
        auto cert = certificate(closure, label);
        EXPECT_EQ(parse_certificate(cert.str()), cert);
    }
}

TEST(Certificate, TamperedStepRejected) {
    auto cert = certificate(theorem1_set(4), lab({0, 1, 2, 3}, 4));
    cert.steps[0].coefficient = Coefficient{Phase(1), 1};
    EXPECT_THROW(cert.replay(), std::logic_error);
    EXPECT_THROW(parse_certificate("certificate ambient=4\n"), std::invalid_argument);
    EXPECT_THROW(parse_certificate("bogus\n"), std::invalid_argument);
}

}  // namespace
}  // namespace cliffgate
