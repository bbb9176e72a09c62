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

#include "fatcat/monoidal.hpp"

#include <string>

#include "fatcat/detail/sharded.hpp"
#include "fatcat/error.hpp"

namespace fatcat {

namespace {

template <class Id>
std::optional<Id> defined(Id v)
{
    if (static_cast<std::uint32_t>(v) == 0xffffffffu)
        return std::nullopt;
    return v;
}

void check_obj(const FiniteCategory& c, ObjId x)
{
    if (index(x) >= c.object_count())
        fail(Errc::structural, "monoidal table references dangling object #" + std::to_string(index(x)));
}

void check_mor(const FiniteCategory& c, MorId f)
{
    if (index(f) >= c.morphism_count())
        fail(Errc::structural, "monoidal table references dangling morphism #" + std::to_string(index(f)));
}

// "f then g" when both exist and are compatible.
std::optional<MorId> then(const FiniteCategory& c, std::optional<MorId> f, std::optional<MorId> g)
{
    if (!f || !g || c.cod(*f) != c.dom(*g))
        return std::nullopt;
    return c.composite(*g, *f);
}

}  // namespace

MonoidalStructure::MonoidalStructure(FiniteCategory base, ObjId unit)
    : base_(std::move(base)), unit_(unit)
{
    check_obj(base_, unit_);
    tensor_obj_.assign(n_obj() * n_obj(), kNoObj);
    tensor_mor_.assign(n_mor() * n_mor(), kNoMor);
    assoc_.assign(n_obj() * n_obj() * n_obj(), kNoMor);
    lunit_.assign(n_obj(), kNoMor);
    runit_.assign(n_obj(), kNoMor);
}

void MonoidalStructure::set_tensor(ObjId a, ObjId b, ObjId result)
{
    check_obj(base_, a);
    check_obj(base_, b);
    check_obj(base_, result);
    tensor_obj_[index(a) * n_obj() + index(b)] = result;
}

void MonoidalStructure::set_tensor(MorId f, MorId g, MorId result)
{
    check_mor(base_, f);
    check_mor(base_, g);
    check_mor(base_, result);
    tensor_mor_[index(f) * n_mor() + index(g)] = result;
}

void MonoidalStructure::set_associator(ObjId a, ObjId b, ObjId c, MorId component)
{
    check_obj(base_, a);
    check_obj(base_, b);
    check_obj(base_, c);
    check_mor(base_, component);
    assoc_[(index(a) * n_obj() + index(b)) * n_obj() + index(c)] = component;
}

void MonoidalStructure::set_left_unitor(ObjId a, MorId component)
{
    check_obj(base_, a);
    check_mor(base_, component);
    lunit_[index(a)] = component;
}

void MonoidalStructure::set_right_unitor(ObjId a, MorId component)
{
    check_obj(base_, a);
    check_mor(base_, component);
    runit_[index(a)] = component;
}

std::optional<ObjId> MonoidalStructure::tensor(ObjId a, ObjId b) const
{
    return defined(tensor_obj_[index(a) * n_obj() + index(b)]);
}

std::optional<MorId> MonoidalStructure::tensor(MorId f, MorId g) const
{
    return defined(tensor_mor_[index(f) * n_mor() + index(g)]);
}

std::optional<MorId> MonoidalStructure::associator(ObjId a, ObjId b, ObjId c) const
{
    return defined(assoc_[(index(a) * n_obj() + index(b)) * n_obj() + index(c)]);
}

std::optional<MorId> MonoidalStructure::left_unitor(ObjId a) const { return defined(lunit_[index(a)]); }

std::optional<MorId> MonoidalStructure::right_unitor(ObjId a) const { return defined(runit_[index(a)]); }

ValidationReport validate_monoidal(const MonoidalStructure& m)
{
    const FiniteCategory& c = m.base();
    const std::size_t n_obj = c.object_count();
    const auto& mors = c.morphisms();
    ValidationReport report;

    auto T = [&](std::optional<ObjId> a, std::optional<ObjId> b) -> std::optional<ObjId> {
        if (!a || !b)
            return std::nullopt;
        return m.tensor(*a, *b);
    };
    auto TM = [&](std::optional<MorId> f, std::optional<MorId> g) -> std::optional<MorId> {
        if (!f || !g)
            return std::nullopt;
        return m.tensor(*f, *g);
    };
    auto name = [&](ObjId x) { return c.object_name(x); };
    auto id = [&](std::optional<ObjId> x) -> std::optional<MorId> {
        if (!x)
            return std::nullopt;
        return c.identity(*x);
    };

    // Bifunctor.
    for (const auto& f : mors) {
        for (const auto& g : mors) {
            const auto src = m.tensor(f.dom, g.dom);
            const auto dst = m.tensor(f.cod, g.cod);
            const auto fg = m.tensor(f.id, g.id);
            if (src && dst) {
                report.count("tensor-total");
                if (!fg)
                    report.add({"tensor-total", {describe(c, f.id), describe(c, g.id)}, "f (x) g is undefined"});
            }
            if (!fg)
                continue;
            report.count("tensor-endpoints");
            if (!src || !dst || c.dom(*fg) != *src || c.cod(*fg) != *dst) {
                report.add({"tensor-endpoints", {describe(c, f.id), describe(c, g.id)},
                            "f (x) g does not run between the tensored endpoints"});
                continue;
            }
            for (const auto& f2 : mors) {
                if (f2.dom != f.cod)
                    continue;
                for (const auto& g2 : mors) {
                    if (g2.dom != g.cod)
                        continue;
                    const auto lhs = then(c, fg, m.tensor(f2.id, g2.id));
                    if (!lhs)
                        continue;
                    const auto rhs = TM(c.composite(f2.id, f.id), c.composite(g2.id, g.id));
                    report.count("tensor-composition");
                    if (lhs != rhs)
                        report.add({"tensor-composition",
                                    {describe(c, f.id), describe(c, g.id), describe(c, f2.id), describe(c, g2.id)},
                                    "(f' (x) g') . (f (x) g) != (f' . f) (x) (g' . g)"});
                }
            }
        }
    }
    for (std::size_t a = 0; a < n_obj; ++a) {
        for (std::size_t b = 0; b < n_obj; ++b) {
            const auto ab = m.tensor(obj(a), obj(b));
            if (!ab)
                continue;
            report.count("tensor-identity");
            if (m.tensor(c.identity(obj(a)), c.identity(obj(b))) != c.identity(*ab))
                report.add({"tensor-identity", {name(obj(a)), name(obj(b))}, "id (x) id != id"});
        }
    }

    // Components: endpoints and invertibility. Only sound components feed the
    // naturality and coherence checks below.
    std::vector<unsigned char> assoc_ok(n_obj * n_obj * n_obj, 0);
    std::vector<unsigned char> l_ok(n_obj, 0), r_ok(n_obj, 0);
    auto component = [&](const std::string& law, std::optional<MorId> comp, std::optional<ObjId> src, ObjId dst,
                         std::vector<std::string> witness) {
        report.count(law);
        std::string problem;
        if (!comp)
            problem = "component missing";
        else if (c.dom(*comp) != *src || c.cod(*comp) != dst)
            problem = "component " + describe(c, *comp) + " has wrong endpoints";
        else if (!c.inverse(*comp))
            problem = "component " + describe(c, *comp) + " is not an isomorphism";
        if (problem.empty())
            return true;
        report.add({law, std::move(witness), problem});
        return false;
    };
    for (std::size_t a = 0; a < n_obj; ++a) {
        for (std::size_t b = 0; b < n_obj; ++b) {
            for (std::size_t d = 0; d < n_obj; ++d) {
                const ObjId A = obj(a), B = obj(b), D = obj(d);
                const auto src = T(m.tensor(A, B), D);
                const auto dst = T(A, m.tensor(B, D));
                if (!src || !dst)
                    continue;
                assoc_ok[(a * n_obj + b) * n_obj + d] = component(
                    "associator-component", m.associator(A, B, D), src, *dst, {name(A), name(B), name(D)});
            }
        }
        const ObjId A = obj(a);
        if (auto s = m.tensor(m.unit(), A))
            l_ok[a] = component("left-unitor-component", m.left_unitor(A), s, A, {name(A)});
        if (auto s = m.tensor(A, m.unit()))
            r_ok[a] = component("right-unitor-component", m.right_unitor(A), s, A, {name(A)});
    }
    auto alpha = [&](std::optional<ObjId> a, std::optional<ObjId> b, std::optional<ObjId> d) -> std::optional<MorId> {
        if (!a || !b || !d || !assoc_ok[(index(*a) * n_obj + index(*b)) * n_obj + index(*d)])
            return std::nullopt;
        return m.associator(*a, *b, *d);
    };
    auto lu = [&](std::optional<ObjId> a) -> std::optional<MorId> {
        if (!a || !l_ok[index(*a)])
            return std::nullopt;
        return m.left_unitor(*a);
    };
    auto ru = [&](std::optional<ObjId> a) -> std::optional<MorId> {
        if (!a || !r_ok[index(*a)])
            return std::nullopt;
        return m.right_unitor(*a);
    };

    // Naturality.
    for (const auto& f1 : mors) {
        for (const auto& f2 : mors) {
            const auto f12 = m.tensor(f1.id, f2.id);
            if (!f12)
                continue;
            for (const auto& f3 : mors) {
                const auto ax = alpha(f1.dom, f2.dom, f3.dom);
                const auto ay = alpha(f1.cod, f2.cod, f3.cod);
                const auto lhs = then(c, TM(f12, f3.id), ay);
                const auto rhs = then(c, ax, TM(f1.id, m.tensor(f2.id, f3.id)));
                if (!lhs || !rhs)
                    continue;
                report.count("associator-naturality");
                if (lhs != rhs)
                    report.add({"associator-naturality",
                                {name(f1.dom), name(f2.dom), name(f3.dom), describe(c, f1.id), describe(c, f2.id),
                                 describe(c, f3.id)},
                                "alpha_y . ((f1 (x) f2) (x) f3) != (f1 (x) (f2 (x) f3)) . alpha_x"});
            }
        }
    }
    const MorId unit_id = c.identity(m.unit());
    for (const auto& f : mors) {
        const auto lhs_l = then(c, m.tensor(unit_id, f.id), lu(f.cod));
        const auto rhs_l = then(c, lu(f.dom), f.id);
        if (lhs_l && rhs_l) {
            report.count("left-unitor-naturality");
            if (lhs_l != rhs_l)
                report.add({"left-unitor-naturality", {name(f.dom), describe(c, f.id)}, "l_y . (1 (x) f) != f . l_x"});
        }
        const auto lhs_r = then(c, m.tensor(f.id, unit_id), ru(f.cod));
        const auto rhs_r = then(c, ru(f.dom), f.id);
        if (lhs_r && rhs_r) {
            report.count("right-unitor-naturality");
            if (lhs_r != rhs_r)
                report.add({"right-unitor-naturality", {name(f.dom), describe(c, f.id)}, "r_y . (f (x) 1) != f . r_x"});
        }
    }

    // Coherence.
    for (std::size_t a = 0; a < n_obj; ++a) {
        const ObjId A = obj(a);
        for (std::size_t b = 0; b < n_obj; ++b) {
            const ObjId B = obj(b);
            for (std::size_t d = 0; d < n_obj; ++d) {
                const ObjId C = obj(d);
                for (std::size_t e = 0; e < n_obj; ++e) {
                    const ObjId D = obj(e);
                    const auto AB = m.tensor(A, B), BC = m.tensor(B, C), CD = m.tensor(C, D);
                    // (id_A (x) a_{B,C,D}) . a_{A,BC,D} . (a_{A,B,C} (x) id_D)
                    const auto path_long =
                        then(c, then(c, TM(alpha(A, B, C), id(D)), alpha(A, BC, D)), TM(id(A), alpha(B, C, D)));
                    // a_{A,B,CD} . a_{AB,C,D}
                    const auto path_short = then(c, alpha(AB, C, D), alpha(A, B, CD));
                    if (!path_long || !path_short)
                        continue;
                    report.count("pentagon");
                    if (path_long != path_short)
                        report.add({"pentagon", {name(A), name(B), name(C), name(D)},
                                    "pentagon paths differ: " + describe(c, *path_long) + " vs " +
                                        describe(c, *path_short)});
                }
            }
            // (id_A (x) l_B) . a_{A,1,B} == r_A (x) id_B
            const auto lhs = then(c, alpha(A, m.unit(), B), TM(id(A), lu(B)));
            const auto rhs = TM(ru(A), id(B));
            if (lhs && rhs) {
                report.count("triangle");
                if (lhs != rhs)
                    report.add({"triangle", {name(A), name(B)}, "(1 (x) l) . a != r (x) 1"});
            }
        }
    }
    return report;
}

FatObject fat_unit(const MonoidalStructure& m) { return FatObject{m.unit(), m.unit(), m.base().identity(m.unit())}; }

std::optional<FatObject> try_tensor(const MonoidalStructure& m, FatObject a, FatObject b)
{
    const auto x = m.tensor(a.x, b.x);
    const auto y = m.tensor(a.y, b.y);
    const auto f = m.tensor(a.f, b.f);
    if (!x || !y || !f)
        return std::nullopt;
    return FatObject{*x, *y, *f};
}

FatObject tensor_fat_objects(const MonoidalStructure& m, FatObject a, FatObject b)
{
    auto t = try_tensor(m, a, b);
    if (!t)
        fail(Errc::out_of_range, "tensor of " + describe(m.base(), a.f) + " and " + describe(m.base(), b.f) +
                                     " lies outside the instance");
    return *t;
}

namespace {

MorId need(std::optional<MorId> m, const char* what)
{
    if (!m)
        fail(Errc::structural, std::string("missing structure component: ") + what);
    return *m;
}

}  // namespace

FatMorphism fat_left_unitor(const MonoidalStructure& m, FatObject x)
{
    const FatObject src = tensor_fat_objects(m, fat_unit(m), x);
    return induced_from_square(m.base(), src.f, x.f, need(m.left_unitor(x.x), "left unitor"),
                               need(m.left_unitor(x.y), "left unitor"));
}

FatMorphism fat_right_unitor(const MonoidalStructure& m, FatObject x)
{
    const FatObject src = tensor_fat_objects(m, x, fat_unit(m));
    return induced_from_square(m.base(), src.f, x.f, need(m.right_unitor(x.x), "right unitor"),
                               need(m.right_unitor(x.y), "right unitor"));
}

FatMorphism fat_associator(const MonoidalStructure& m, FatObject x1, FatObject x2, FatObject x3)
{
    const FatObject src = tensor_fat_objects(m, tensor_fat_objects(m, x1, x2), x3);
    const FatObject dst = tensor_fat_objects(m, x1, tensor_fat_objects(m, x2, x3));
    return induced_from_square(m.base(), src.f, dst.f, need(m.associator(x1.x, x2.x, x3.x), "associator"),
                               need(m.associator(x1.y, x2.y, x3.y), "associator"));
}

ValidationReport verify_fat_coherence(const MonoidalStructure& m, Exec exec)
{
    const FiniteCategory& c = m.base();
    const std::vector<FatObject> objs = fat_objects(c);
    const FatObject unit = fat_unit(m);

    auto tensor_cell_edge = [&](std::optional<MorId> a, std::optional<MorId> b, const char* what) {
        if (!a || !b)
            fail(Errc::structural, std::string("missing structure component: ") + what);
        return need(m.tensor(*a, *b), what);
    };

    return detail::sharded_sweep(objs.size(), exec, [&](std::size_t i, ValidationReport& r) {
        const FatObject x1 = objs[i];
        auto fail_law = [&](const std::string& law, std::vector<FatObject> xs, const std::string& why) {
            std::vector<std::string> w;
            for (const auto& x : xs)
                w.push_back(describe(c, x.f));
            r.add({law, std::move(w), why});
        };

        for (const FatObject& x2 : objs) {
            // Unitor trough.
            const auto x1u = try_tensor(m, x1, unit);
            const auto ux2 = try_tensor(m, unit, x2);
            const auto a = x1u ? try_tensor(m, *x1u, x2) : std::nullopt;
            const auto b = ux2 ? try_tensor(m, x1, *ux2) : std::nullopt;
            const auto t = try_tensor(m, x1, x2);
            if (a && b && t) {
                r.count("triangle");
                std::optional<FatMorphism> left, right;
                try {
                    r.count("triangle-slant", 2);
                    right = induced_from_square(
                        c, b->f, t->f,
                        tensor_cell_edge(c.identity(x1.x), m.left_unitor(x2.x), "1 (x) l"),
                        tensor_cell_edge(c.identity(x1.y), m.left_unitor(x2.y), "1 (x) l"));
                    left = induced_from_square(
                        c, a->f, t->f,
                        tensor_cell_edge(m.right_unitor(x1.x), c.identity(x2.x), "r (x) 1"),
                        tensor_cell_edge(m.right_unitor(x1.y), c.identity(x2.y), "r (x) 1"));
                } catch (const Error& e) {
                    fail_law("triangle-slant", {x1, x2}, e.what());
                }
                if (left && right) {
                    try {
                        const FatMorphism assoc = fat_associator(m, x1, unit, x2);
                        if (vertical_compose(c, *right, assoc) != *left)
                            fail_law("triangle", {x1, x2}, "(1 (x) l^F) . alpha^F != r^F (x) 1 as cells");
                    } catch (const Error& e) {
                        fail_law("triangle", {x1, x2}, e.what());
                    }
                }
            }

            const auto x12 = try_tensor(m, x1, x2);
            if (!x12)
                continue;
            for (const FatObject& x3 : objs) {
                const auto x23 = try_tensor(m, x2, x3);
                const auto p_left = try_tensor(m, *x12, x3);
                if (!x23 || !p_left)
                    continue;
                if (try_tensor(m, x1, *x23)) {
                    r.count("associator-bijection");
                    try {
                        if (!is_bijection(c, fat_associator(m, x1, x2, x3).h))
                            fail_law("associator-bijection", {x1, x2, x3}, "h-table is not a bijection");
                    } catch (const Error& e) {
                        fail_law("associator-bijection", {x1, x2, x3}, e.what());
                    }
                }

                for (const FatObject& x4 : objs) {
                    const auto x34 = try_tensor(m, x3, x4);
                    const auto p0 = try_tensor(m, *p_left, x4);
                    const auto x1_23 = try_tensor(m, x1, *x23);
                    const auto p1 = x1_23 ? try_tensor(m, *x1_23, x4) : std::nullopt;
                    const auto x23_4 = try_tensor(m, *x23, x4);
                    const auto p2 = x23_4 ? try_tensor(m, x1, *x23_4) : std::nullopt;
                    const auto x2_34 = x34 ? try_tensor(m, x2, *x34) : std::nullopt;
                    const auto p3 = x2_34 ? try_tensor(m, x1, *x2_34) : std::nullopt;
                    const auto q = x34 ? try_tensor(m, *x12, *x34) : std::nullopt;
                    if (!p0 || !p1 || !p2 || !p3 || !q)
                        continue;
                    r.count("pentagon");
                    try {
                        const FatMorphism a1 = induced_from_square(
                            c, p0->f, p1->f,
                            tensor_cell_edge(m.associator(x1.x, x2.x, x3.x), c.identity(x4.x), "alpha (x) 1"),
                            tensor_cell_edge(m.associator(x1.y, x2.y, x3.y), c.identity(x4.y), "alpha (x) 1"));
                        const FatMorphism a2 = fat_associator(m, x1, *x23, x4);
                        const FatMorphism a3 = induced_from_square(
                            c, p2->f, p3->f,
                            tensor_cell_edge(c.identity(x1.x), m.associator(x2.x, x3.x, x4.x), "1 (x) alpha"),
                            tensor_cell_edge(c.identity(x1.y), m.associator(x2.y, x3.y, x4.y), "1 (x) alpha"));
                        const FatMorphism b1 = fat_associator(m, *x12, x3, x4);
                        const FatMorphism b2 = fat_associator(m, x1, x2, *x34);
                        const FatMorphism long_path = vertical_compose(c, a3, vertical_compose(c, a2, a1));
                        const FatMorphism short_path = vertical_compose(c, b2, b1);
                        if (long_path != short_path)
                            fail_law("pentagon", {x1, x2, x3, x4}, "pentagon of fat associators does not commute");
                    } catch (const Error& e) {
                        fail_law("pentagon", {x1, x2, x3, x4}, e.what());
                    }
                }
            }
        }
    });
}

}  // namespace fatcat
