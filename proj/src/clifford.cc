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

#include "cliffgate/clifford.h"

#include <charconv>

namespace cliffgate {

ParseError::ParseError(const std::string &msg, size_t column)
    : std::invalid_argument("column " + std::to_string(column) + ": " + msg), column(column) {
}

static uint64_t ambient_mask(size_t ambient) {
    return ambient >= 64 ? ~uint64_t{0} : (uint64_t{1} << ambient) - 1;
}

BasisLabel::BasisLabel(uint64_t bits, size_t ambient) : bits_(bits), ambient_((uint8_t)ambient) {
    if (ambient > MAX_AMBIENT) {
        throw std::invalid_argument(
            "ambient generator count " + std::to_string(ambient) + " exceeds " + std::to_string(MAX_AMBIENT));
    }
    if (bits & ~ambient_mask(ambient)) {
        throw std::invalid_argument("label has an index outside ambient " + std::to_string(ambient));
    }
}

BasisLabel BasisLabel::from_indices(const std::vector<size_t> &indices, size_t ambient) {
    uint64_t bits = 0;
    for (size_t k : indices) {
        if (k >= ambient) {
            throw std::invalid_argument(
                "index " + std::to_string(k) + " out of range for ambient " + std::to_string(ambient));
        }
        if ((bits >> k) & 1) {
            throw std::invalid_argument("duplicate index " + std::to_string(k));
        }
        bits |= uint64_t{1} << k;
    }
    return BasisLabel(bits, ambient);
}

BasisLabel BasisLabel::unit(size_t ambient) {
    return BasisLabel(0, ambient);
}

BasisLabel BasisLabel::generator(size_t index, size_t ambient) {
    if (index >= ambient) {
        throw std::invalid_argument(
            "generator index " + std::to_string(index) + " out of range for ambient " + std::to_string(ambient));
    }
    return BasisLabel(uint64_t{1} << index, ambient);
}

std::vector<size_t> BasisLabel::indices() const {
    std::vector<size_t> result;
    result.reserve(order());
    for (uint64_t rest = bits_; rest; rest &= rest - 1) {
        result.push_back((size_t)std::countr_zero(rest));
    }
    return result;
}

std::string BasisLabel::str() const {
    std::string result = "e[";
    bool first = true;
    for (size_t k : indices()) {
        if (!first) {
            result += ',';
        }
        first = false;
        result += std::to_string(k);
    }
    result += ']';
    return result;
}

std::strong_ordering BasisLabel::operator<=>(const BasisLabel &other) const {
    if (auto c = order() <=> other.order(); c != 0) {
        return c;
    }
    if (bits_ != other.bits_) {
        // Same size: the sequence holding the lowest differing index comes first.
        uint64_t lowest = (bits_ ^ other.bits_) & (~(bits_ ^ other.bits_) + 1);
        return (bits_ & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return ambient_ <=> other.ambient_;
}

std::string Coefficient::str() const {
    static constexpr const char *UNIT[] = {"1", "i", "-1", "-i"};
    static constexpr const char *PREFIX[] = {"", "i*", "-", "-i*"};
    if (pow2 == 0) {
        return UNIT[phase.m];
    }
    return std::string(PREFIX[phase.m]) + "2^" + std::to_string(pow2);
}

namespace {

/// Cursor over text being parsed; reports 1-based columns.
struct Cursor {
    std::string_view text;
    size_t pos = 0;

    bool done() const {
        return pos >= text.size();
    }
    bool eat(std::string_view token) {
        if (text.substr(pos).starts_with(token)) {
            pos += token.size();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string &msg) const {
        throw ParseError(msg, pos + 1);
    }
    void expect(std::string_view token) {
        if (!eat(token)) {
            fail("expected '" + std::string(token) + "'");
        }
    }
    long long integer(bool allow_sign) {
        size_t start = pos;
        if (allow_sign && !done() && text[pos] == '-') {
            pos++;
        }
        while (!done() && text[pos] >= '0' && text[pos] <= '9') {
            pos++;
        }
        long long value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
        if (ec != std::errc() || ptr != text.data() + pos) {
            pos = start;
            fail("expected an integer");
        }
        return value;
    }
};

Phase parse_sign(Cursor &c) {
    if (c.eat("-i*")) {
        return Phase(3);
    }
    if (c.eat("i*")) {
        return Phase(1);
    }
    if (c.eat("-")) {
        return Phase(2);
    }
    return Phase(0);
}

int parse_pow2(Cursor &c) {
    size_t start = c.pos;
    long long p = c.integer(true);
    if (p < -100000 || p > 100000) {
        c.pos = start;
        c.fail("power of two out of range");
    }
    return (int)p;
}

}  // namespace

Coefficient parse_coefficient(std::string_view text) {
    static constexpr std::string_view UNIT[] = {"1", "i", "-1", "-i"};
    for (int m = 0; m < 4; m++) {
        if (text == UNIT[m]) {
            return {Phase(m), 0};
        }
    }
    Cursor c{text};
    Coefficient result;
    result.phase = parse_sign(c);
    c.expect("2^");
    result.pow2 = parse_pow2(c);
    if (!c.done()) {
        c.fail("trailing characters");
    }
    return result;
}

ScaledElement::ScaledElement(Coefficient coefficient, BasisLabel label) : coefficient_(coefficient), label_(label) {
}

ScaledElement::ScaledElement(BasisLabel label) : label_(label) {
}

ScaledElement ScaledElement::zero(size_t ambient) {
    ScaledElement z{BasisLabel::unit(ambient)};
    z.zero_ = true;
    return z;
}

ScaledElement ScaledElement::scaled(Coefficient factor) const {
    if (zero_) {
        return *this;
    }
    return {coefficient_ * factor, label_};
}

std::string ScaledElement::str() const {
    return format_element(*this);
}

void require_same_ambient(const BasisLabel &a, const BasisLabel &b) {
    if (a.ambient() != b.ambient()) {
        throw std::invalid_argument(
            "ambient mismatch: " + std::to_string(a.ambient()) + " vs " + std::to_string(b.ambient()));
    }
}

Phase reorder_sign(const BasisLabel &a, const BasisLabel &b) {
    // Each index j of b moves left past every index of a greater than j; a repeated
    // index then meets its twin and squares to +1.
    size_t transpositions = 0;
    uint64_t left = a.bits();
    for (uint64_t rest = b.bits(); rest; rest &= rest - 1) {
        int j = std::countr_zero(rest);
        transpositions += (size_t)std::popcount(j >= 63 ? uint64_t{0} : left >> (j + 1));
    }
    return Phase((transpositions & 1) ? 2 : 0);
}

ScaledElement product(const ScaledElement &a, const ScaledElement &b) {
    require_same_ambient(a.label(), b.label());
    if (a.is_zero() || b.is_zero()) {
        return ScaledElement::zero(a.ambient());
    }
    Coefficient c = a.coefficient() * b.coefficient();
    c.phase = c.phase * reorder_sign(a.label(), b.label());
    return {c, BasisLabel(a.label().bits() ^ b.label().bits(), a.ambient())};
}

ScaledElement operator*(const ScaledElement &a, const ScaledElement &b) {
    return product(a, b);
}

bool commutes(const BasisLabel &a, const BasisLabel &b) {
    require_same_ambient(a, b);
    size_t shared = (size_t)std::popcount(a.bits() & b.bits());
    return ((a.order() * b.order() - shared) & 1) == 0;
}

ScaledElement commutator(const ScaledElement &a, const ScaledElement &b) {
    require_same_ambient(a.label(), b.label());
    if (a.is_zero() || b.is_zero() || commutes(a.label(), b.label())) {
        return ScaledElement::zero(a.ambient());
    }
    return product(a, b).scaled({Phase(0), 1});
}

ScaledElement hermitize(const BasisLabel &label) {
    size_t k = label.order();
    return {{Phase(k == 0 ? 0 : (int)(k * (k - 1) / 2 % 2)), 0}, label};
}

ScaledElement parse_element(std::string_view text, size_t ambient) {
    Cursor c{text};
    if (text == "0") {
        return ScaledElement::zero(ambient);
    }
    Coefficient coefficient;
    coefficient.phase = parse_sign(c);
    if (c.eat("2^")) {
        coefficient.pow2 = parse_pow2(c);
        c.expect("*");
    }
    c.expect("e[");
    ScaledElement result{coefficient, BasisLabel::unit(ambient)};
    uint64_t seen = 0;
    if (!c.eat("]")) {
        while (true) {
            size_t start = c.pos;
            if (c.done() || c.text[c.pos] == '-') {
                c.fail("expected an index");
            }
            long long k = c.integer(false);
            if (k < 0 || (size_t)k >= ambient) {
                c.pos = start;
                c.fail("index " + std::to_string(k) + " out of range for ambient " + std::to_string(ambient));
            }
            if ((seen >> k) & 1) {
                c.pos = start;
                c.fail("duplicate index " + std::to_string(k));
            }
            seen |= uint64_t{1} << k;
            result = product(result, ScaledElement(BasisLabel::generator((size_t)k, ambient)));
            if (c.eat("]")) {
                break;
            }
            c.expect(",");
        }
    }
    if (!c.done()) {
        c.fail("trailing characters");
    }
    return result;
}

std::string format_element(const ScaledElement &element) {
    if (element.is_zero()) {
        return "0";
    }
    static constexpr const char *PREFIX[] = {"", "i*", "-", "-i*"};
    const Coefficient &c = element.coefficient();
    std::string result = PREFIX[c.phase.m];
    if (c.pow2 != 0) {
        result += "2^" + std::to_string(c.pow2) + "*";
    }
    return result + element.label().str();
}

}  // namespace cliffgate
