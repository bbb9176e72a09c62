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

#include "fatcat/fat.hpp"

#include <string>

#include "fatcat/error.hpp"

namespace fatcat {

namespace {

std::string obj_pair(const FiniteCategory& c, ObjId x, ObjId y)
{
    return "(" + c.object_name(x) + ", " + c.object_name(y) + ")";
}

void check_hom_map(const FiniteCategory& c, const HomMap& h)
{
    if (h.table.size() != c.hom(h.src_x, h.src_y).size())
        fail(Errc::endpoint_mismatch, "hom-map table does not cover hom" + obj_pair(c, h.src_x, h.src_y));
    for (MorId m : h.table) {
        if (index(m) >= c.morphism_count() || c.dom(m) != h.dst_x || c.cod(m) != h.dst_y)
            fail(Errc::endpoint_mismatch, "hom-map image outside hom" + obj_pair(c, h.dst_x, h.dst_y));
    }
}

}  // namespace

FatObject fat_object(const FiniteCategory& c, MorId f) { return FatObject{c.dom(f), c.cod(f), f}; }

std::vector<FatObject> fat_objects(const FiniteCategory& c)
{
    std::vector<FatObject> out;
    out.reserve(c.morphism_count());
    for (const auto& m : c.morphisms())
        out.push_back(FatObject{m.dom, m.cod, m.id});
    return out;
}

MorId HomMap::apply(const FiniteCategory& c, MorId phi) const
{
    if (c.dom(phi) != src_x || c.cod(phi) != src_y)
        fail(Errc::endpoint_mismatch, describe(c, phi) + " is not in hom" + obj_pair(c, src_x, src_y));
    return table[c.hom_position(phi)];
}

HomMap identity_hom_map(const FiniteCategory& c, ObjId x, ObjId y)
{
    auto h = c.hom(x, y);
    return HomMap{x, y, x, y, {h.begin(), h.end()}};
}

HomMap compose_hom_maps(const FiniteCategory& c, const HomMap& outer, const HomMap& inner)
{
    if (inner.dst_x != outer.src_x || inner.dst_y != outer.src_y)
        fail(Errc::composition_undefined, "hom-maps do not compose: middle hom-sets differ");
    HomMap out{inner.src_x, inner.src_y, outer.dst_x, outer.dst_y, {}};
    out.table.reserve(inner.table.size());
    for (MorId m : inner.table)
        out.table.push_back(outer.table[c.hom_position(m)]);
    return out;
}

bool is_bijection(const FiniteCategory& c, const HomMap& h)
{
    const auto target = c.hom(h.dst_x, h.dst_y);
    if (target.size() != h.table.size())
        return false;
    std::vector<bool> hit(target.size(), false);
    for (MorId m : h.table) {
        const std::size_t p = c.hom_position(m);
        if (hit[p])
            return false;
        hit[p] = true;
    }
    return true;
}

FatMorphism make_fat_morphism(const FiniteCategory& c, FatObject src, FatObject dst, MorId g1, MorId g2,
                              HomMap h)
{
    for (const FatObject& o : {src, dst})
        if (c.dom(o.f) != o.x || c.cod(o.f) != o.y)
            fail(Errc::endpoint_mismatch, "fat object " + describe(c, o.f) + " has inconsistent endpoints");
    if (c.dom(g1) != src.x || c.cod(g1) != dst.x)
        fail(Errc::endpoint_mismatch, "left vertical " + describe(c, g1) + " must run " +
                                          c.object_name(src.x) + " -> " + c.object_name(dst.x));
    if (c.dom(g2) != src.y || c.cod(g2) != dst.y)
        fail(Errc::endpoint_mismatch, "right vertical " + describe(c, g2) + " must run " +
                                          c.object_name(src.y) + " -> " + c.object_name(dst.y));
    if (h.src_x != src.x || h.src_y != src.y || h.dst_x != dst.x || h.dst_y != dst.y)
        fail(Errc::endpoint_mismatch, "hom-map endpoints do not match the cell");
    check_hom_map(c, h);
    const MorId image = h.table[c.hom_position(src.f)];
    if (image != dst.f)
        fail(Errc::defining_condition, "h sends " + describe(c, src.f) + " to " + describe(c, image) +
                                           ", expected " + describe(c, dst.f));
    return FatMorphism{src, dst, g1, g2, std::move(h)};
}

FatMorphism identity_cell(const FiniteCategory& c, FatObject x)
{
    return FatMorphism{x, x, c.identity(x.x), c.identity(x.y), identity_hom_map(c, x.x, x.y)};
}

FatMorphism vertical_compose(const FiniteCategory& c, const FatMorphism& v, const FatMorphism& u)
{
    if (u.dst != v.src)
        fail(Errc::composition_undefined, "vertical composition: " + describe(c, u.dst.f) +
                                              " is not the source of the upper cell's successor");
    return FatMorphism{u.src, v.dst, compose(c, v.g1, u.g1), compose(c, v.g2, u.g2),
                       compose_hom_maps(c, v.h, u.h)};
}

FatMorphism induced_from_square(const FiniteCategory& c, MorId f1, MorId f2, MorId g1, MorId g2)
{
    if (c.dom(g1) != c.dom(f1) || c.dom(g2) != c.cod(f1) || c.cod(g1) != c.dom(f2) ||
        c.cod(g2) != c.cod(f2))
        fail(Errc::endpoint_mismatch, "square edges do not meet");
    if (compose(c, g2, f1) != compose(c, f2, g1))
        fail(Errc::non_commuting_square, "square (" + describe(c, f1) + ", " + describe(c, f2) + ", " +
                                             describe(c, g1) + ", " + describe(c, g2) + ") does not commute");
    const auto g1_inv = c.inverse(g1);
    if (!g1_inv)
        fail(Errc::not_invertible, "left vertical " + describe(c, g1) + " is not invertible");

    const FatObject src = fat_object(c, f1);
    const FatObject dst = fat_object(c, f2);
    HomMap h{src.x, src.y, dst.x, dst.y, {}};
    for (MorId phi : c.hom(src.x, src.y))
        h.table.push_back(compose(c, compose(c, g2, phi), *g1_inv));
    return make_fat_morphism(c, src, dst, g1, g2, std::move(h));
}

std::vector<CommutingSquare> commuting_squares(const FiniteCategory& c)
{
    std::vector<CommutingSquare> out;
    const std::size_t n_obj = c.object_count();
    for (const auto& m1 : c.morphisms()) {
        const MorId f1 = m1.id;
        for (std::size_t x2 = 0; x2 < n_obj; ++x2) {
            for (MorId g1 : c.hom(m1.dom, obj(x2))) {
                if (!c.inverse(g1))
                    continue;
                for (std::size_t y2 = 0; y2 < n_obj; ++y2) {
                    for (MorId g2 : c.hom(m1.cod, obj(y2))) {
                        const MorId top = c.composite_unchecked(g2, f1);
                        if (top == kNoMor)
                            continue;
                        for (MorId f2 : c.hom(obj(x2), obj(y2)))
                            if (c.composite_unchecked(f2, g1) == top)
                                out.push_back(CommutingSquare{f1, f2, g1, g2});
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace fatcat
