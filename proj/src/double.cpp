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

#include "fatcat/double.hpp"

#include <map>
#include <string>

#include "fatcat/detail/estimates.hpp"
#include "fatcat/detail/sharded.hpp"
#include "fatcat/error.hpp"

namespace fatcat {

Square Square::make(const FiniteCategory& c, FatMorphism cell)
{
    const std::pair<const char*, MorId> edges[] = {
        {"left vertical", cell.g1}, {"right vertical", cell.g2}, {"top edge", cell.src.f}, {"bottom edge", cell.dst.f}};
    for (auto [role, m] : edges)
        if (!c.inverse(m))
            fail(Errc::not_invertible, std::string(role) + " " + describe(c, m) + " is not invertible");
    return Square(std::move(cell));
}

Square horizontal_compose(const FiniteCategory& c, const Square& left, const Square& right)
{
    if (right.g1() != left.g2())
        fail(Errc::shared_vertical_mismatch, "horizontal composition needs a shared vertical: " +
                                                 describe(c, right.g1()) + " != " + describe(c, left.g2()));
    const MorId f1 = left.src().f;
    const auto f1_inv = c.inverse(f1);
    if (!f1_inv)
        fail(Errc::not_invertible, "top edge " + describe(c, f1) + " is not invertible");
    const MorId h_f1 = left.h().apply(c, f1);

    const FatObject src{left.src().x, right.src().y, compose(c, right.src().f, f1)};
    const FatObject dst{left.dst().x, right.dst().y, compose(c, right.dst().f, left.dst().f)};
    HomMap h{src.x, src.y, dst.x, dst.y, {}};
    for (MorId f : c.hom(src.x, src.y))
        h.table.push_back(compose(c, right.h().apply(c, compose(c, f, *f1_inv)), h_f1));
    return Square::make(c, make_fat_morphism(c, src, dst, left.g1(), right.g2(), std::move(h)));
}

Square vertical_compose(const FiniteCategory& c, const Square& v, const Square& u)
{
    return Square::make(c, vertical_compose(c, v.cell(), u.cell()));
}

Square horizontal_identity(const FiniteCategory& c, MorId g)
{
    const MorId top = c.identity(c.dom(g));
    const MorId bottom = c.identity(c.cod(g));
    return Square::make(c, induced_from_square(c, top, bottom, g, g));
}

InterchangeOutcome verify_interchange(const FiniteCategory& c, const SquareGrid& grid)
{
    const auto& [tl, tr, bl, br] = grid;
    if (tl.g2() != tr.g1() || bl.g2() != br.g1())
        fail(Errc::not_pasteable, "grid rows do not share their middle verticals");
    if (bl.src() != tl.dst() || br.src() != tr.dst())
        fail(Errc::not_pasteable, "grid columns do not share their middle horizontals");

    const Square top = horizontal_compose(c, tl, tr);
    const Square bottom = horizontal_compose(c, bl, br);
    const Square left = vertical_compose(c, bl, tl);
    const Square right = vertical_compose(c, br, tr);

    FatMorphism rows_first = vertical_compose(c, bottom.cell(), top.cell());
    FatMorphism columns_first = horizontal_compose(c, left, right).cell();
    const bool holds = rows_first == columns_first;
    return InterchangeOutcome{holds, std::move(rows_first), std::move(columns_first)};
}

HomMap right_translation(const FiniteCategory& c, MorId g, ObjId z)
{
    if (!c.inverse(g))
        fail(Errc::not_invertible, "right translation needs an isomorphism, got " + describe(c, g));
    const ObjId y = c.dom(g);
    const ObjId x = c.cod(g);
    HomMap h{x, z, y, z, {}};
    for (MorId f : c.hom(x, z))
        h.table.push_back(compose(c, f, g));
    return h;
}

CellPredicate always_predicate()
{
    return {"always", [](const FiniteCategory&, const HomMap&) { return true; }};
}

CellPredicate identity_predicate()
{
    return {"identity", [](const FiniteCategory& c, const HomMap& h) {
                return h.src_x == h.dst_x && h.src_y == h.dst_y && h == identity_hom_map(c, h.src_x, h.src_y);
            }};
}

CellPredicate two_sided_translation_predicate()
{
    return {"two-sided-translation", [](const FiniteCategory& c, const HomMap& h) {
                const auto domain = c.hom(h.src_x, h.src_y);
                for (MorId u : c.hom(h.src_y, h.dst_y)) {
                    if (!c.inverse(u))
                        continue;
                    for (MorId v : c.hom(h.dst_x, h.src_x)) {
                        if (!c.inverse(v))
                            continue;
                        bool match = true;
                        for (std::size_t i = 0; i < domain.size() && match; ++i) {
                            const MorId uphi = c.composite_unchecked(u, domain[i]);
                            match = uphi != kNoMor && c.composite_unchecked(uphi, v) == h.table[i];
                        }
                        if (match)
                            return true;
                    }
                }
                return false;
            }};
}

std::optional<CellPredicate> predicate_by_name(const std::string& name)
{
    for (auto make : {always_predicate, identity_predicate, two_sided_translation_predicate}) {
        CellPredicate p = make();
        if (p.name == name)
            return p;
    }
    return std::nullopt;
}

std::vector<Square> induced_squares(const FiniteCategory& c)
{
    std::vector<Square> out;
    for (const auto& s : commuting_squares(c)) {
        if (!c.inverse(s.f1) || !c.inverse(s.f2) || !c.inverse(s.g2))
            continue;
        out.push_back(Square::make(c, induced_from_square(c, s.f1, s.f2, s.g1, s.g2)));
    }
    return out;
}

ValidationReport verify_enrichment_closure(const FiniteCategory& c, const CellPredicate& p,
                                           std::span<const Square> extra)
{
    constexpr double kMaxCells = double(std::size_t{1} << 18);
    if (detail::square_count(c, true) + static_cast<double>(extra.size()) > kMaxCells)
        fail(Errc::size_guard, "too many squares for an exhaustive enrichment sweep");

    ValidationReport report;
    for (const auto& m : c.morphisms()) {
        if (!c.inverse(m.id))
            continue;
        for (std::size_t z = 0; z < c.object_count(); ++z) {
            report.count("translation-membership");
            if (!p.test(c, right_translation(c, m.id, obj(z))))
                report.add({"translation-membership", {"r_" + describe(c, m.id), c.object_name(obj(z))},
                            "r_g not in the subcategory selected by '" + p.name + "'"});
        }
    }
    if (!report.ok())
        return report;

    std::vector<Square> cells;
    for (auto& s : induced_squares(c))
        if (p.test(c, s.h()))
            cells.push_back(std::move(s));
    for (const auto& s : extra)
        if (p.test(c, s.h()))
            cells.push_back(s);
    report.count("member-cells", cells.size());

    std::multimap<FatObject, std::size_t> by_src;
    std::multimap<MorId, std::size_t> by_g1;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        by_src.emplace(cells[i].src(), i);
        by_g1.emplace(cells[i].g1(), i);
    }

    auto witness = [&](const Square& a, const Square& b) {
        return std::vector<std::string>{describe(c, a.src().f), describe(c, a.g1()), describe(c, a.g2()),
                                        describe(c, b.src().f), describe(c, b.g1()), describe(c, b.g2())};
    };

    ValidationReport closure = detail::sharded_sweep(cells.size(), Exec::parallel, [&](std::size_t i, ValidationReport& r) {
        const Square& u = cells[i];
        try {
            auto [vb, ve] = by_src.equal_range(u.dst());
            for (auto it = vb; it != ve; ++it) {
                const Square& v = cells[it->second];
                r.count("vertical-closure");
                if (!p.test(c, vertical_compose(c, v, u).h()))
                    r.add({"vertical-closure", witness(u, v), "vertical composite leaves the subcategory"});
            }
            auto [hb, he] = by_g1.equal_range(u.g2());
            for (auto it = hb; it != he; ++it) {
                const Square& right = cells[it->second];
                const Square composite = horizontal_compose(c, u, right);
                r.count("horizontal-closure");
                if (!p.test(c, composite.h()))
                    r.add({"horizontal-closure", witness(u, right), "horizontal composite leaves the subcategory"});

                const MorId f1 = u.src().f;
                const HomMap r_inner = right_translation(c, *c.inverse(f1), right.src().y);
                const HomMap r_outer = right_translation(c, u.h().apply(c, f1), right.dst().y);
                const HomMap factored = compose_hom_maps(c, r_outer, compose_hom_maps(c, right.h(), r_inner));
                r.count("factorization");
                if (factored != composite.h())
                    r.add({"factorization", witness(u, right), "h'' differs from r_{h(f1)} . h' . r_{f1^-1}"});
            }
        } catch (const Error& e) {
            r.add({"evaluation-error", {describe(c, u.src().f)}, e.what()});
        }
    });
    report.merge(closure);
    return report;
}

}  // namespace fatcat
