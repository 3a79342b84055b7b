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

#ifndef CLIFFGATE_CLIFFORD_H
#define CLIFFGATE_CLIFFORD_H

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cliffgate {

/// Largest supported generator count. Labels are stored as a 64-bit mask.
constexpr size_t MAX_AMBIENT = 64;

/// Raised when text does not match the label grammar.
/// `column` is the 1-based position of the offending character.
struct ParseError : std::invalid_argument {
    size_t column;
    ParseError(const std::string &msg, size_t column);
};

/// A basis element Γ_I of Cl(ambient, ℂ), identified by the set I of generator indices.
///
/// The ambient generator count is carried explicitly. The empty set is the unit element.
class BasisLabel {
   public:
    BasisLabel() = default;
    BasisLabel(uint64_t bits, size_t ambient);
    static BasisLabel from_indices(const std::vector<size_t> &indices, size_t ambient);
    static BasisLabel unit(size_t ambient);
    static BasisLabel generator(size_t index, size_t ambient);

    uint64_t bits() const {
        return bits_;
    }
    size_t ambient() const {
        return ambient_;
    }
    /// Number of generators in the product.
    size_t order() const {
        return (size_t)std::popcount(bits_);
    }
    bool contains(size_t index) const {
        return index < 64 && ((bits_ >> index) & 1);
    }
    bool is_unit() const {
        return bits_ == 0;
    }
    std::vector<size_t> indices() const;

    /// "e[0,1,2]".
    std::string str() const;

    bool operator==(const BasisLabel &other) const = default;

    /// Canonical order: by order, then lexicographically by ascending index sequence.
    std::strong_ordering operator<=>(const BasisLabel &other) const;

   private:
    uint64_t bits_ = 0;
    uint8_t ambient_ = 0;
};

/// The scalar i^m.
struct Phase {
    uint8_t m = 0;

    constexpr Phase() = default;
    constexpr explicit Phase(int exponent) : m((uint8_t)(((exponent % 4) + 4) % 4)) {
    }
    constexpr Phase operator*(Phase other) const {
        return Phase(m + other.m);
    }
    constexpr Phase inverse() const {
        return Phase(4 - m);
    }
    constexpr bool operator==(const Phase &other) const = default;
};

/// An exact scalar i^m · 2^p.
struct Coefficient {
    Phase phase;
    int pow2 = 0;

    Coefficient operator*(Coefficient other) const {
        return {phase * other.phase, pow2 + other.pow2};
    }
    Coefficient inverse() const {
        return {phase.inverse(), -pow2};
    }
    bool operator==(const Coefficient &other) const = default;

    /// "1", "-i", "2^1", "-i*2^3".
    std::string str() const;
};

Coefficient parse_coefficient(std::string_view text);

/// Exactly (i^m · 2^p) Γ_label, or the distinguished zero.
class ScaledElement {
   public:
    ScaledElement() = default;
    ScaledElement(Coefficient coefficient, BasisLabel label);
    explicit ScaledElement(BasisLabel label);
    static ScaledElement zero(size_t ambient);

    bool is_zero() const {
        return zero_;
    }
    const Coefficient &coefficient() const {
        return coefficient_;
    }
    const BasisLabel &label() const {
        return label_;
    }
    size_t ambient() const {
        return label_.ambient();
    }

    ScaledElement scaled(Coefficient factor) const;
    std::string str() const;

    bool operator==(const ScaledElement &other) const = default;

   private:
    Coefficient coefficient_{};
    BasisLabel label_{};
    bool zero_ = false;
};

/// Sign (as i^0 or i^2) of Γ_a Γ_b relative to Γ_{a △ b}.
Phase reorder_sign(const BasisLabel &a, const BasisLabel &b);

ScaledElement product(const ScaledElement &a, const ScaledElement &b);
ScaledElement operator*(const ScaledElement &a, const ScaledElement &b);

/// True iff Γ_a Γ_b = Γ_b Γ_a. Otherwise they anticommute.
bool commutes(const BasisLabel &a, const BasisLabel &b);

/// [a, b] = ab - ba. Zero when the labels commute, else 2ab.
ScaledElement commutator(const ScaledElement &a, const ScaledElement &b);

/// ẽ_I: Γ_I times i when Γ_I squares to -1, so the result squares to +1 and is Hermitian.
ScaledElement hermitize(const BasisLabel &label);

/// Parses the label grammar:
///
///     element := "0" | [sign] [scale] "e[" [index ("," index)*] "]"
///     sign    := "-" | "i*" | "-i*"
///     scale   := "2^" integer "*"
///
/// Whitespace is not allowed. Indices must be distinct and below `ambient`; they may be
/// given in any order, and the reordering sign is folded into the coefficient.
ScaledElement parse_element(std::string_view text, size_t ambient);

/// Canonical text of an element; parse_element(format_element(x)) == x.
std::string format_element(const ScaledElement &element);

/// Checks that the operands share an ambient count.
void require_same_ambient(const BasisLabel &a, const BasisLabel &b);

}  // namespace cliffgate

template <>
struct std::hash<cliffgate::BasisLabel> {
    size_t operator()(const cliffgate::BasisLabel &label) const noexcept {
        return std::hash<uint64_t>{}(label.bits() * 0x9E3779B97F4A7C15ULL ^ label.ambient());
    }
};

#endif
