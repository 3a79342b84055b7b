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

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace cliffgate {

NotInClosure::NotInClosure(const BasisLabel &target, size_t closure_dimension)
    : std::invalid_argument(
          target.str() + " is not in the closure (closure dimension " + std::to_string(closure_dimension) + ")"),
      closure_dimension(closure_dimension) {
}

GeneratorSet::GeneratorSet(size_t ambient, std::vector<ScaledElement> elements)
    : ambient_(ambient), elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw std::invalid_argument("generator set is empty");
    }
    std::unordered_set<BasisLabel> seen;
    for (const auto &e : elements_) {
        if (e.ambient() != ambient_) {
            throw std::invalid_argument(
                "generator " + e.str() + " has ambient " + std::to_string(e.ambient()) + ", expected " +
                std::to_string(ambient_));
        }
        if (e.is_zero()) {
            throw std::invalid_argument("generator set contains a zero element");
        }
        if (!seen.insert(e.label()).second) {
            throw std::invalid_argument("duplicate generator label " + e.label().str());
        }
    }
}

GeneratorSet generators_only(size_t ambient) {
    std::vector<ScaledElement> elements;
    for (size_t k = 0; k < ambient; k++) {
        elements.emplace_back(BasisLabel::generator(k, ambient));
    }
    return GeneratorSet(ambient, std::move(elements));
}

GeneratorSet generators_plus(size_t ambient, const ScaledElement &extra) {
    std::vector<ScaledElement> elements = generators_only(ambient).elements();
    elements.push_back(extra);
    return GeneratorSet(ambient, std::move(elements));
}

GeneratorSet theorem1_set(size_t ambient) {
    if (ambient < 3) {
        throw std::invalid_argument(
            "theorem1_set needs at least 3 generators for e[0,1,2], got ambient " + std::to_string(ambient));
    }
    return generators_plus(ambient, hermitize(BasisLabel::from_indices({0, 1, 2}, ambient)));
}

GeneratorSet note1_set(size_t ambient, bool with_order3) {
    if (ambient < (with_order3 ? 3u : 1u)) {
        throw std::invalid_argument("note1_set: ambient " + std::to_string(ambient) + " too small");
    }
    std::vector<ScaledElement> elements{ScaledElement(BasisLabel::generator(0, ambient))};
    for (size_t l = 1; l < ambient; l++) {
        elements.push_back(hermitize(BasisLabel::from_indices({l - 1, l}, ambient)));
    }
    if (with_order3) {
        elements.push_back(hermitize(BasisLabel::from_indices({0, 1, 2}, ambient)));
    }
    return GeneratorSet(ambient, std::move(elements));
}

ClosureResult::ClosureResult(size_t ambient, std::vector<Entry> entries) : ambient_(ambient), entries_(std::move(entries)) {
    index_.reserve(entries_.size());
    for (size_t k = 0; k < entries_.size(); k++) {
        index_.emplace(entries_[k].label(), k);
    }
}

size_t ClosureResult::initial_count() const {
    return (size_t)std::count_if(entries_.begin(), entries_.end(), [](const Entry &e) {
        return e.is_initial();
    });
}

bool ClosureResult::contains(const BasisLabel &label) const {
    return index_.contains(label);
}

std::optional<size_t> ClosureResult::index_of(const BasisLabel &label) const {
    auto it = index_.find(label);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

const ClosureResult::Entry &ClosureResult::at(const BasisLabel &label) const {
    auto k = index_of(label);
    if (!k) {
        throw NotInClosure(label, dimension());
    }
    return entries_[*k];
}

std::vector<BasisLabel> ClosureResult::labels() const {
    std::vector<BasisLabel> result;
    result.reserve(entries_.size());
    for (const auto &e : entries_) {
        result.push_back(e.label());
    }
    std::sort(result.begin(), result.end());
    return result;
}

namespace {

struct Candidate {
    size_t a;
    size_t b;
};

using CandidateMap = std::unordered_map<BasisLabel, Candidate>;

bool pair_less(const std::vector<ClosureResult::Entry> &entries, const Candidate &x, const Candidate &y) {
    const auto &xa = entries[x.a].label();
    const auto &ya = entries[y.a].label();
    if (xa != ya) {
        return xa < ya;
    }
    return entries[x.b].label() < entries[y.b].label();
}

void offer(const std::vector<ClosureResult::Entry> &entries, CandidateMap &out, const BasisLabel &label, Candidate c) {
    auto [it, inserted] = out.try_emplace(label, c);
    if (!inserted && pair_less(entries, c, it->second)) {
        it->second = c;
    }
}

/// Every pair (f, r) with f in [frontier_begin, end) and r < f, restricted to f ≡ shard mod shards.
void sweep(
    const std::vector<ClosureResult::Entry> &entries,
    const std::unordered_map<BasisLabel, size_t> &reached,
    size_t frontier_begin,
    size_t shard,
    size_t shards,
    CandidateMap &out) {
    for (size_t f = frontier_begin + shard; f < entries.size(); f += shards) {
        const BasisLabel &lf = entries[f].label();
        for (size_t r = 0; r < f; r++) {
            const BasisLabel &lr = entries[r].label();
            if (commutes(lf, lr)) {
                continue;
            }
            BasisLabel result(lf.bits() ^ lr.bits(), lf.ambient());
            if (reached.contains(result)) {
                continue;
            }
            Candidate c = lr < lf ? Candidate{r, f} : Candidate{f, r};
            offer(entries, out, result, c);
        }
    }
}

}  // namespace

ClosureResult close(const GeneratorSet &gens, const ClosureOptions &options) {
    std::vector<ClosureResult::Entry> entries;
    std::unordered_map<BasisLabel, size_t> reached;
    for (const auto &e : gens.elements()) {
        reached.emplace(e.label(), entries.size());
        entries.push_back({e, 0, std::nullopt, std::nullopt});
    }

    size_t threads = std::max<size_t>(1, options.threads);
    size_t frontier_begin = 0;
    for (size_t depth = 1; frontier_begin < entries.size(); depth++) {
        std::vector<CandidateMap> partial(threads);
        if (threads == 1) {
            sweep(entries, reached, frontier_begin, 0, 1, partial[0]);
        } else {
            std::vector<std::jthread> workers;
            for (size_t t = 0; t < threads; t++) {
                workers.emplace_back([&, t] {
                    sweep(entries, reached, frontier_begin, t, threads, partial[t]);
                });
            }
        }
        CandidateMap merged = std::move(partial[0]);
        for (size_t t = 1; t < threads; t++) {
            for (const auto &[label, c] : partial[t]) {
                offer(entries, merged, label, c);
            }
        }

        std::vector<std::pair<BasisLabel, Candidate>> layer(merged.begin(), merged.end());
        std::sort(layer.begin(), layer.end(), [](const auto &x, const auto &y) {
            return x.first < y.first;
        });
        if (entries.size() + layer.size() > options.max_labels) {
            throw CapExceeded(
                "closure exceeds " + std::to_string(options.max_labels) + " labels at BFS depth " +
                std::to_string(depth));
        }

        frontier_begin = entries.size();
        for (const auto &[label, c] : layer) {
            ScaledElement element = commutator(entries[c.a].element, entries[c.b].element);
            reached.emplace(label, entries.size());
            entries.push_back({element, depth, c.a, c.b});
        }
    }
    return ClosureResult(gens.ambient(), std::move(entries));
}

size_t dimension(const GeneratorSet &gens, const ClosureOptions &options) {
    return close(gens, options).dimension();
}

uint64_t non_unit_label_count(size_t ambient) {
    if (ambient > MAX_AMBIENT) {
        throw std::invalid_argument("ambient " + std::to_string(ambient) + " exceeds " + std::to_string(MAX_AMBIENT));
    }
    return ambient == 64 ? ~uint64_t{0} : (uint64_t{1} << ambient) - 1;
}

static void require_even_ambient(size_t ambient) {
    if (ambient % 2 != 0) {
        throw std::invalid_argument(
            "universality is only defined for an even ambient count (2^(m/2)-dimensional matrices); got " +
            std::to_string(ambient));
    }
}

bool is_universal(const ClosureResult &closure) {
    require_even_ambient(closure.ambient());
    return closure.dimension() == non_unit_label_count(closure.ambient());
}

bool is_universal(const GeneratorSet &gens, const ClosureOptions &options) {
    require_even_ambient(gens.ambient());
    return is_universal(close(gens, options));
}

std::vector<BasisLabel> closedness_audit(const ClosureResult &closure) {
    std::vector<BasisLabel> missing;
    const auto &entries = closure.entries();
    for (size_t a = 0; a < entries.size(); a++) {
        for (size_t b = 0; b < entries.size(); b++) {
            ScaledElement c = commutator(entries[a].element, entries[b].element);
            if (!c.is_zero() && !closure.contains(c.label())) {
                missing.push_back(c.label());
            }
        }
    }
    std::sort(missing.begin(), missing.end());
    missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
    return missing;
}

Certificate certificate(const ClosureResult &closure, const BasisLabel &target) {
    auto target_index = closure.index_of(target);
    if (!target_index) {
        throw NotInClosure(target, closure.dimension());
    }
    const auto &entries = closure.entries();

    std::vector<bool> needed(entries.size(), false);
    std::vector<size_t> stack{*target_index};
    while (!stack.empty()) {
        size_t k = stack.back();
        stack.pop_back();
        if (needed[k]) {
            continue;
        }
        needed[k] = true;
        if (!entries[k].is_initial()) {
            stack.push_back(*entries[k].parent_a);
            stack.push_back(*entries[k].parent_b);
        }
    }

    Certificate cert;
    cert.ambient = closure.ambient();
    cert.target = target;
    // Entries are already ordered by (depth, canonical label), so parents precede children.
    for (size_t k = 0; k < entries.size(); k++) {
        if (!needed[k]) {
            continue;
        }
        const auto &e = entries[k];
        if (e.is_initial()) {
            cert.initial.push_back(e.element);
        } else {
            cert.steps.push_back(
                {e.label(), entries[*e.parent_a].label(), entries[*e.parent_b].label(), e.element.coefficient()});
        }
    }
    cert.scalar = entries[*target_index].element.coefficient() * hermitize(target).coefficient().inverse();
    return cert;
}

Certificate certificate(const GeneratorSet &gens, const BasisLabel &target, const ClosureOptions &options) {
    return certificate(close(gens, options), target);
}

ScaledElement Certificate::replay() const {
    std::map<BasisLabel, ScaledElement> derived;
    for (const auto &e : initial) {
        derived.emplace(e.label(), e);
    }
    auto lookup = [&](const BasisLabel &label) -> const ScaledElement & {
        auto it = derived.find(label);
        if (it == derived.end()) {
            throw std::logic_error("certificate uses " + label.str() + " before deriving it");
        }
        return it->second;
    };
    for (const auto &step : steps) {
        ScaledElement c = commutator(lookup(step.parent_a), lookup(step.parent_b));
        if (c.is_zero() || c.label() != step.result || c.coefficient() != step.coefficient) {
            throw std::logic_error(
                "certificate step for " + step.result.str() + " does not hold: commutator is " + c.str());
        }
        derived.emplace(step.result, c);
    }
    const ScaledElement &result = lookup(target);
    if (result != hermitize(target).scaled(scalar)) {
        throw std::logic_error("certificate scalar does not match the derived target " + result.str());
    }
    return result;
}

std::string Certificate::str() const {
    std::ostringstream out;
    out << "certificate ambient=" << ambient << " target=" << target.str() << "\n";
    for (const auto &e : initial) {
        out << "given " << e.str() << "\n";
    }
    for (const auto &s : steps) {
        out << s.result.str() << " := [" << s.parent_a.str() << ", " << s.parent_b.str() << "] * "
            << s.coefficient.str() << "\n";
    }
    out << "scalar " << scalar.str() << "\n";
    return out.str();
}

namespace {

BasisLabel parse_bare_label(std::string_view text, size_t ambient, size_t line) {
    try {
        ScaledElement e = parse_element(text, ambient);
        if (e.is_zero() || e.coefficient() != Coefficient{}) {
            throw std::invalid_argument("expected a bare label, got " + std::string(text));
        }
        return e.label();
    } catch (const ParseError &ex) {
        throw std::invalid_argument("certificate line " + std::to_string(line) + ": " + ex.what());
    }
}

}  // namespace

Certificate parse_certificate(std::string_view text) {
    Certificate cert;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_number = 0;
    bool header = false;
    bool have_scalar = false;
    auto fail = [&](const std::string &msg) {
        throw std::invalid_argument("certificate line " + std::to_string(line_number) + ": " + msg);
    };
    while (std::getline(in, line)) {
        line_number++;
        if (line.empty()) {
            continue;
        }
        std::string_view view = line;
        if (!header) {
            constexpr std::string_view HEAD = "certificate ambient=";
            size_t target_at = view.find(" target=");
            if (!view.starts_with(HEAD) || target_at == std::string_view::npos) {
                fail("expected 'certificate ambient=<m> target=<label>'");
            }
            cert.ambient = std::stoul(std::string(view.substr(HEAD.size(), target_at - HEAD.size())));
            cert.target = parse_bare_label(view.substr(target_at + 8), cert.ambient, line_number);
            header = true;
        } else if (have_scalar) {
            fail("content after scalar line");
        } else if (view.starts_with("given ")) {
            try {
                cert.initial.push_back(parse_element(view.substr(6), cert.ambient));
            } catch (const ParseError &ex) {
                fail(ex.what());
            }
        } else if (view.starts_with("scalar ")) {
            try {
                cert.scalar = parse_coefficient(view.substr(7));
            } catch (const ParseError &ex) {
                fail(ex.what());
            }
            have_scalar = true;
        } else {
            size_t assign = view.find(" := [");
            size_t comma = view.find(", ", assign == std::string_view::npos ? 0 : assign);
            size_t close_at = view.find("] * ", comma == std::string_view::npos ? 0 : comma);
            if (assign == std::string_view::npos || comma == std::string_view::npos ||
                close_at == std::string_view::npos) {
                fail("expected '<label> := [<label>, <label>] * <coefficient>'");
            }
            Certificate::Step step;
            step.result = parse_bare_label(view.substr(0, assign), cert.ambient, line_number);
            step.parent_a = parse_bare_label(view.substr(assign + 5, comma - assign - 5), cert.ambient, line_number);
            step.parent_b = parse_bare_label(view.substr(comma + 2, close_at - comma - 2), cert.ambient, line_number);
            try {
                step.coefficient = parse_coefficient(view.substr(close_at + 4));
            } catch (const ParseError &ex) {
                fail(ex.what());
            }
            cert.steps.push_back(step);
        }
    }
    if (!header || !have_scalar) {
        throw std::invalid_argument("certificate is missing its header or scalar line");
    }
    return cert;
}

}  // namespace cliffgate
