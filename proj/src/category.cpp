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

#include "fatcat/category.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "fatcat/detail/sharded.hpp"
#include "fatcat/error.hpp"

namespace fatcat {

std::optional<MorId> FiniteCategory::composite(MorId g, MorId f) const
{
    if (index(g) >= morphisms_.size() || index(f) >= morphisms_.size())
        return std::nullopt;
    MorId r = composite_unchecked(g, f);
    if (r == kNoMor)
        return std::nullopt;
    return r;
}

std::optional<ObjId> FiniteCategory::find_object(std::string_view name) const
{
    for (std::size_t i = 0; i < object_names_.size(); ++i)
        if (object_names_[i] == name)
            return obj(i);
    return std::nullopt;
}

std::optional<MorId> FiniteCategory::find_morphism(std::string_view label) const
{
    for (const auto& m : morphisms_)
        if (m.label == label)
            return m.id;
    return std::nullopt;
}

bool FiniteCategory::operator==(const FiniteCategory& other) const
{
    return object_names_ == other.object_names_ && morphisms_ == other.morphisms_ &&
           compose_ == other.compose_ && identities_ == other.identities_;
}

ObjId CategoryBuilder::add_object(std::string name)
{
    objects_.push_back(std::move(name));
    return obj(objects_.size() - 1);
}

MorId CategoryBuilder::add_morphism(std::string label, ObjId dom, ObjId cod)
{
    MorId id = mor(morphisms_.size());
    morphisms_.push_back(MorRecord{id, dom, cod, std::move(label)});
    return id;
}

void CategoryBuilder::set_identity(ObjId x, MorId id) { set_identity_raw(index(x), index(id)); }

void CategoryBuilder::set_composite(MorId g, MorId f, MorId result)
{
    set_composite_raw(index(g), index(f), index(result));
}

void CategoryBuilder::set_identity_raw(std::size_t x, std::size_t id) { identities_.emplace_back(x, id); }

void CategoryBuilder::set_composite_raw(std::size_t g, std::size_t f, std::size_t result)
{
    entries_.push_back(Entry{g, f, result});
}

FiniteCategory CategoryBuilder::build() &&
{
    const std::size_t n_obj = objects_.size();
    const std::size_t n_mor = morphisms_.size();

    if (n_obj > limits_.max_objects)
        fail(Errc::size_guard, "object count " + std::to_string(n_obj) + " exceeds guard " +
                                   std::to_string(limits_.max_objects));
    if (n_mor > limits_.max_morphisms)
        fail(Errc::size_guard, "morphism count " + std::to_string(n_mor) + " exceeds guard " +
                                   std::to_string(limits_.max_morphisms));

    for (const auto& m : morphisms_)
        if (index(m.dom) >= n_obj || index(m.cod) >= n_obj)
            fail(Errc::structural, "morphism '" + m.label + "' has a dangling endpoint");

    FiniteCategory c;
    c.identities_.assign(n_obj, kNoMor);
    for (auto [x, id] : identities_) {
        if (x >= n_obj)
            fail(Errc::structural, "identity assigned to dangling object #" + std::to_string(x));
        if (id >= n_mor)
            fail(Errc::structural, "identity of '" + objects_[x] + "' is dangling morphism #" +
                                       std::to_string(id));
        if (c.identities_[x] != kNoMor && c.identities_[x] != mor(id))
            fail(Errc::structural, "object '" + objects_[x] + "' has two identities");
        c.identities_[x] = mor(id);
    }
    for (std::size_t x = 0; x < n_obj; ++x)
        if (c.identities_[x] == kNoMor)
            fail(Errc::structural, "object '" + objects_[x] + "' has no identity");

    c.compose_.assign(n_mor * n_mor, kNoMor);
    for (const auto& e : entries_) {
        for (std::size_t id : {e.g, e.f, e.result})
            if (id >= n_mor)
                fail(Errc::structural, "composition entry references dangling morphism #" +
                                           std::to_string(id));
        MorId& slot = c.compose_[e.g * n_mor + e.f];
        if (slot != kNoMor && slot != mor(e.result))
            fail(Errc::structural, "conflicting composition entries for (" + morphisms_[e.g].label +
                                       ", " + morphisms_[e.f].label + ")");
        slot = mor(e.result);
    }

    c.homs_.assign(n_obj * n_obj, {});
    c.hom_pos_.assign(n_mor, 0);
    for (const auto& m : morphisms_) {
        auto& h = c.homs_[index(m.dom) * n_obj + index(m.cod)];
        c.hom_pos_[index(m.id)] = h.size();
        h.push_back(m.id);
    }
    for (const auto& h : c.homs_)
        c.max_hom_ = std::max(c.max_hom_, h.size());
    if (c.max_hom_ > limits_.max_hom_set)
        fail(Errc::size_guard, "hom-set of size " + std::to_string(c.max_hom_) + " exceeds guard " +
                                   std::to_string(limits_.max_hom_set));

    c.object_names_ = std::move(objects_);
    c.morphisms_ = std::move(morphisms_);

    c.inverses_.assign(n_mor, kNoMor);
    for (const auto& m : c.morphisms_) {
        const MorId id_dom = c.identities_[index(m.dom)];
        const MorId id_cod = c.identities_[index(m.cod)];
        for (MorId g : c.hom(m.cod, m.dom)) {
            if (c.composite_unchecked(g, m.id) == id_dom && c.composite_unchecked(m.id, g) == id_cod) {
                c.inverses_[index(m.id)] = g;
                break;
            }
        }
    }
    return c;
}

std::string describe(const FiniteCategory& c, MorId f)
{
    const auto& l = c.label(f);
    return l.empty() ? "#" + std::to_string(index(f)) : l;
}

MorId compose(const FiniteCategory& c, MorId g, MorId f)
{
    if (c.cod(f) != c.dom(g))
        fail(Errc::composition_undefined,
             "cannot compose " + describe(c, g) + " after " + describe(c, f) + ": codomain mismatch");
    auto r = c.composite(g, f);
    if (!r)
        fail(Errc::composition_undefined,
             "composition table has no entry for (" + describe(c, g) + ", " + describe(c, f) + ")");
    return *r;
}

std::vector<MorId> hom_set(const FiniteCategory& c, ObjId x, ObjId y)
{
    auto h = c.hom(x, y);
    return {h.begin(), h.end()};
}

std::optional<MorId> is_isomorphism(const FiniteCategory& c, MorId f) { return c.inverse(f); }

ValidationReport validate_category(const FiniteCategory& c, Exec exec)
{
    const std::size_t n = c.morphism_count();
    ValidationReport report;

    for (std::size_t x = 0; x < c.object_count(); ++x) {
        report.count("identity-endpoints");
        MorId id = c.identity(obj(x));
        if (c.dom(id) != obj(x) || c.cod(id) != obj(x))
            report.add({"identity-endpoints", {c.object_name(obj(x)), describe(c, id)},
                        "identity does not go from the object to itself"});
    }

    // well_typed[g*n+f]: entry present on a compatible pair with correct endpoints.
    std::vector<unsigned char> well_typed(n * n, 0);
    for (std::size_t gi = 0; gi < n; ++gi) {
        for (std::size_t fi = 0; fi < n; ++fi) {
            const MorId g = mor(gi), f = mor(fi);
            const bool compatible = c.cod(f) == c.dom(g);
            const MorId r = c.composite_unchecked(g, f);
            if (!compatible) {
                if (r != kNoMor)
                    report.add({"composition-domain", {describe(c, g), describe(c, f)},
                                "entry defined on an incompatible pair"});
                continue;
            }
            report.count("composition-total");
            if (r == kNoMor) {
                report.add({"composition-total", {describe(c, g), describe(c, f)},
                            "no entry for a compatible pair"});
                continue;
            }
            report.count("composite-endpoints");
            if (c.dom(r) != c.dom(f) || c.cod(r) != c.cod(g)) {
                report.add({"composite-endpoints", {describe(c, g), describe(c, f)},
                            "result " + describe(c, r) + " has the wrong domain or codomain"});
                continue;
            }
            well_typed[gi * n + fi] = 1;
        }
    }
    auto ok = [&](MorId g, MorId f) { return well_typed[index(g) * n + index(f)] != 0; };

    for (std::size_t fi = 0; fi < n; ++fi) {
        const MorId f = mor(fi);
        const MorId id_dom = c.identity(c.dom(f));
        const MorId id_cod = c.identity(c.cod(f));
        if (ok(f, id_dom)) {
            report.count("right-identity");
            if (c.composite_unchecked(f, id_dom) != f)
                report.add({"right-identity", {describe(c, f)}, "f . id != f"});
        }
        if (ok(id_cod, f)) {
            report.count("left-identity");
            if (c.composite_unchecked(id_cod, f) != f)
                report.add({"left-identity", {describe(c, f)}, "id . f != f"});
        }
    }

    // Shard associativity by the middle morphism g.
    ValidationReport assoc = detail::sharded_sweep(n, exec, [&](std::size_t gi, ValidationReport& r) {
        const MorId g = mor(gi);
        std::uint64_t checked = 0;
        for (std::size_t x = 0; x < c.object_count(); ++x) {
            for (MorId f : c.hom(obj(x), c.dom(g))) {
                if (!ok(g, f))
                    continue;
                const MorId gf = c.composite_unchecked(g, f);
                for (std::size_t z = 0; z < c.object_count(); ++z) {
                    for (MorId h : c.hom(c.cod(g), obj(z))) {
                        if (!ok(h, g))
                            continue;
                        const MorId hg = c.composite_unchecked(h, g);
                        if (!ok(h, gf) || !ok(hg, f))
                            continue;
                        ++checked;
                        if (c.composite_unchecked(h, gf) != c.composite_unchecked(hg, f))
                            r.add({"associativity", {describe(c, h), describe(c, g), describe(c, f)},
                                   "h.(g.f) != (h.g).f"});
                    }
                }
            }
        }
        r.count("associativity", checked);
    });
    report.merge(assoc);
    return report;
}

}  // namespace fatcat
