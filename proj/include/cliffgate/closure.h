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

#ifndef CLIFFGATE_CLOSURE_H
#define CLIFFGATE_CLOSURE_H

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cliffgate/clifford.h"

namespace cliffgate {

/// Thrown when a search or enumeration would exceed its configured size cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a certificate is requested for a label outside the closure.
struct NotInClosure : std::invalid_argument {
    size_t closure_dimension;
    NotInClosure(const BasisLabel &target, size_t closure_dimension);
};

/// A nonempty list of nonzero elements with distinct labels over one ambient count.
class GeneratorSet {
   public:
    GeneratorSet(size_t ambient, std::vector<ScaledElement> elements);

    size_t ambient() const {
        return ambient_;
    }
    const std::vector<ScaledElement> &elements() const {
        return elements_;
    }
    size_t size() const {
        return elements_.size();
    }

   private:
    size_t ambient_;
    std::vector<ScaledElement> elements_;
};

/// Γ_0, ..., Γ_{ambient-1}.
GeneratorSet generators_only(size_t ambient);

/// The generators plus one extra element (typically ẽ_I with |I| = 3 or 4).
GeneratorSet generators_plus(size_t ambient, const ScaledElement &extra);

/// {Γ_0, ..., Γ_{ambient-1}, ẽ_{012}}. Needs ambient >= 3.
GeneratorSet theorem1_set(size_t ambient);

/// {Γ_0, ẽ_{01}, ẽ_{12}, ..., ẽ_{ambient-2,ambient-1}, ẽ_{012}}; optionally without ẽ_{012}.
GeneratorSet note1_set(size_t ambient, bool with_order3 = true);

struct ClosureOptions {
    /// Worker threads for the pairwise commutator sweep; results do not depend on it.
    size_t threads = 1;
    /// Abort with CapExceeded once more than this many labels are reached.
    size_t max_labels = size_t{1} << 22;
};

/// The labels reachable from a generator set by nonzero commutators.
///
/// Entries are stored in discovery order: the initial elements first, then one BFS layer
/// at a time, each layer in ascending canonical label order. Each discovered entry keeps
/// the pair it was first obtained from; among all pairs producing a label in the same
/// layer the smallest (parent_a, parent_b) in canonical label order wins.
class ClosureResult {
   public:
    struct Entry {
        /// The exact element this label was obtained as.
        ScaledElement element;
        /// BFS layer; 0 for initial elements.
        size_t depth = 0;
        /// Indices of the parents in entries(); empty for initial elements.
        std::optional<size_t> parent_a;
        std::optional<size_t> parent_b;

        const BasisLabel &label() const {
            return element.label();
        }
        bool is_initial() const {
            return !parent_a.has_value();
        }
    };

    ClosureResult(size_t ambient, std::vector<Entry> entries);

    size_t ambient() const {
        return ambient_;
    }
    size_t dimension() const {
        return entries_.size();
    }
    size_t initial_count() const;
    const std::vector<Entry> &entries() const {
        return entries_;
    }
    bool contains(const BasisLabel &label) const;
    const Entry &at(const BasisLabel &label) const;
    std::optional<size_t> index_of(const BasisLabel &label) const;

    /// Reached labels in canonical order.
    std::vector<BasisLabel> labels() const;

   private:
    size_t ambient_;
    std::vector<Entry> entries_;
    std::unordered_map<BasisLabel, size_t> index_;
};

ClosureResult close(const GeneratorSet &gens, const ClosureOptions &options = {});

size_t dimension(const GeneratorSet &gens, const ClosureOptions &options = {});

/// Number of basis labels over `ambient` generators other than the unit: 2^ambient - 1.
/// For even ambient 2n this is dim su(2^n).
uint64_t non_unit_label_count(size_t ambient);

/// True iff the closure reaches every non-unit label, i.e. spans su(2^n); together with
/// the global phase this is all of u(2^n). Rejects odd ambient counts.
bool is_universal(const GeneratorSet &gens, const ClosureOptions &options = {});
bool is_universal(const ClosureResult &closure);

/// Recomputes every pairwise commutator of the reached set and returns any label not in
/// it. Empty means the set is closed.
std::vector<BasisLabel> closedness_audit(const ClosureResult &closure);

/// A commutator derivation of one basis element from initial generators.
///
/// Each step reads "result := [parent_a, parent_b] * coefficient", meaning the commutator
/// of the elements previously derived for the two parents equals coefficient · Γ_result.
/// Parents are initial elements or earlier results. The derived element for the target
/// equals scalar · ẽ_target.
struct Certificate {
    struct Step {
        BasisLabel result;
        BasisLabel parent_a;
        BasisLabel parent_b;
        Coefficient coefficient;

        bool operator==(const Step &other) const = default;
    };

    size_t ambient = 0;
    BasisLabel target;
    std::vector<ScaledElement> initial;
    std::vector<Step> steps;
    Coefficient scalar;

    /// Replays the steps symbolically; throws std::logic_error on an inconsistent step.
    /// Returns the derived element for the target.
    ScaledElement replay() const;

    std::string str() const;
    bool operator==(const Certificate &other) const = default;
};

/// Minimal-depth derivation of `target` from the BFS provenance of `closure`.
Certificate certificate(const ClosureResult &closure, const BasisLabel &target);
Certificate certificate(const GeneratorSet &gens, const BasisLabel &target, const ClosureOptions &options = {});

/// Reads the text produced by Certificate::str().
Certificate parse_certificate(std::string_view text);

}  // namespace cliffgate

#endif
