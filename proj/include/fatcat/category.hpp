/*
 * Copyright 2026 The fatcat Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fatcat/ids.hpp"
#include "fatcat/report.hpp"

namespace fatcat {

struct MorRecord {
    MorId id;
    ObjId dom;
    ObjId cod;
    std::string label;

    bool operator==(const MorRecord&) const = default;
};

/// A finite category given by explicit tables.
///
/// Composition is stored, never derived: `composite(g, f)` is the table entry
/// for "f then g". Construction checks only that every id resolves; the
/// category axioms themselves are checked by `validate_category`, so a
/// malformed-but-well-typed table can still be built and diagnosed.
///
/// Instances are immutable and safe to share read-only between threads.
class FiniteCategory {
public:
    FiniteCategory() = default;

    std::size_t object_count() const noexcept { return object_names_.size(); }
    std::size_t morphism_count() const noexcept { return morphisms_.size(); }

    const std::string& object_name(ObjId x) const { return object_names_.at(index(x)); }
    const MorRecord& morphism(MorId f) const { return morphisms_.at(index(f)); }
    const std::string& label(MorId f) const { return morphism(f).label; }
    ObjId dom(MorId f) const { return morphisms_[index(f)].dom; }
    ObjId cod(MorId f) const { return morphisms_[index(f)].cod; }
    MorId identity(ObjId x) const { return identities_[index(x)]; }

    /// Raw table entry, or nullopt when the entry is absent.
    std::optional<MorId> composite(MorId g, MorId f) const;

    /// Unchecked lookup for hot loops; kNoMor when absent.
    MorId composite_unchecked(MorId g, MorId f) const noexcept
    {
        return compose_[index(g) * morphisms_.size() + index(f)];
    }

    /// Morphisms x -> y in ascending id order.
    std::span<const MorId> hom(ObjId x, ObjId y) const
    {
        return homs_[index(x) * object_names_.size() + index(y)];
    }

    /// Position of f inside hom(dom f, cod f).
    std::size_t hom_position(MorId f) const noexcept { return hom_pos_[index(f)]; }

    /// Two-sided inverse found by scanning hom(cod f, dom f) at construction.
    std::optional<MorId> inverse(MorId f) const
    {
        MorId g = inverses_[index(f)];
        if (g == kNoMor)
            return std::nullopt;
        return g;
    }

    std::size_t max_hom_size() const noexcept { return max_hom_; }

    std::optional<ObjId> find_object(std::string_view name) const;
    std::optional<MorId> find_morphism(std::string_view label) const;

    const std::vector<std::string>& object_names() const noexcept { return object_names_; }
    const std::vector<MorRecord>& morphisms() const noexcept { return morphisms_; }

    bool operator==(const FiniteCategory& other) const;

private:
    friend class CategoryBuilder;

    std::vector<std::string> object_names_;
    std::vector<MorRecord> morphisms_;
    std::vector<MorId> compose_;  // morphism_count^2, row g, column f
    std::vector<MorId> identities_;
    std::vector<std::vector<MorId>> homs_;
    std::vector<std::size_t> hom_pos_;
    std::vector<MorId> inverses_;
    std::size_t max_hom_ = 0;
};

/// Assembles a FiniteCategory. `build()` throws Error(structural) on any
/// dangling id, missing identity, or guard violation.
class CategoryBuilder {
public:
    explicit CategoryBuilder(SizeLimits limits = {}) : limits_(limits) {}

    ObjId add_object(std::string name);
    MorId add_morphism(std::string label, ObjId dom, ObjId cod);
    void set_identity(ObjId x, MorId id);
    void set_composite(MorId g, MorId f, MorId result);

    // Raw-index variants for loaders: ids are range-checked only in build().
    void set_identity_raw(std::size_t x, std::size_t id);
    void set_composite_raw(std::size_t g, std::size_t f, std::size_t result);

    std::size_t object_count() const noexcept { return objects_.size(); }
    std::size_t morphism_count() const noexcept { return morphisms_.size(); }

    FiniteCategory build() &&;

private:
    struct Entry {
        std::size_t g, f, result;
    };

    SizeLimits limits_;
    std::vector<std::string> objects_;
    std::vector<MorRecord> morphisms_;
    std::vector<std::pair<std::size_t, std::size_t>> identities_;
    std::vector<Entry> entries_;
};

/// Checks the category axioms exhaustively.
///
/// Laws reported: "composition-total" (compatible pair without an entry),
/// "composition-domain" (entry on an incompatible pair), "composite-endpoints",
/// "identity-endpoints", "left-identity", "right-identity", "associativity".
/// Associativity triples are only evaluated when all four composites involved
/// are present and well typed, so one corrupted entry is reported once.
ValidationReport validate_category(const FiniteCategory& c, Exec exec = Exec::parallel);

/// Table lookup of "f then g". Throws Error(composition_undefined) when
/// cod(f) != dom(g) or the entry is missing.
MorId compose(const FiniteCategory& c, MorId g, MorId f);

std::vector<MorId> hom_set(const FiniteCategory& c, ObjId x, ObjId y);

std::optional<MorId> is_isomorphism(const FiniteCategory& c, MorId f);

/// "name" for diagnostics: label if present, else "#id".
std::string describe(const FiniteCategory& c, MorId f);

}  // namespace fatcat
