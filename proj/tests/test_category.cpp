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

#include <doctest.h>

#include <algorithm>

#include "fatcat/category.hpp"
#include "fatcat/error.hpp"
#include "fatcat/group.hpp"
#include "fatcat/matrix.hpp"
#include "oracles.hpp"

using namespace fatcat;

namespace {

// Two objects a, b with one arrow u: a -> b; not a groupoid.
FiniteCategory arrow_category()
{
    CategoryBuilder b;
    const ObjId a = b.add_object("a");
    const ObjId bb = b.add_object("b");
    const MorId ia = b.add_morphism("1a", a, a);
    const MorId ib = b.add_morphism("1b", bb, bb);
    const MorId u = b.add_morphism("u", a, bb);
    b.set_identity(a, ia);
    b.set_identity(bb, ib);
    b.set_composite(ia, ia, ia);
    b.set_composite(ib, ib, ib);
    b.set_composite(u, ia, u);
    b.set_composite(ib, u, u);
    return std::move(b).build();
}

// Raw Z2 with an optionally corrupted entry.
FiniteCategory z2_with(MorId g, MorId f, MorId result)
{
    CategoryBuilder b;
    const ObjId x = b.add_object("*");
    const MorId e = b.add_morphism("e", x, x);
    const MorId a = b.add_morphism("a", x, x);
    b.set_identity(x, e);
    for (MorId p : {e, a})
        for (MorId q : {e, a}) {
            MorId r = (p == q) ? e : a;
            if (p == g && q == f)
                r = result;
            if (r != kNoMor)
                b.set_composite(p, q, r);
        }
    return std::move(b).build();
}

}  // namespace

TEST_CASE("s3 composition follows the permutation oracle")
{
    const FiniteGroup s3 = symmetric_group(3);
    const FiniteCategory c = group_as_groupoid(s3);
    const oracle::Perm perms[] = {oracle::e, oracle::t23, oracle::t12, oracle::c123, oracle::c132, oracle::t13};
    for (std::size_t g = 0; g < 6; ++g)
        for (std::size_t f = 0; f < 6; ++f) {
            const oracle::Perm expect = oracle::compose(perms[g], perms[f]);
            const MorId r = compose(c, mor(g), mor(f));
            CHECK(r == mor(static_cast<std::size_t>(std::find(std::begin(perms), std::end(perms), expect) - perms)));
        }
    // "(13) then (12)" is the 3-cycle 1 -> 3 -> 2.
    CHECK(c.label(compose(c, *c.find_morphism("(12)"), *c.find_morphism("(13)"))) == "(132)");
    CHECK(validate_category(c).ok());
}

TEST_CASE("associativity triples match a brute-force count")
{
    const FiniteCategory c = matrix_groupoid(3, 1, 2).category;  // two objects, two isos each way
    std::uint64_t triples = 0;
    for (const auto& f : c.morphisms())
        for (const auto& g : c.morphisms())
            for (const auto& h : c.morphisms())
                if (f.cod == g.dom && g.cod == h.dom)
                    ++triples;
    const ValidationReport r = validate_category(c);
    CHECK(r.ok());
    CHECK(r.checks("associativity") == triples);
    CHECK(triples == 128);
}

TEST_CASE("hom-sets are ascending and inverses are two-sided")
{
    const FiniteCategory c = matrix_groupoid(2, 2, 2).category;
    for (std::size_t x = 0; x < c.object_count(); ++x)
        for (std::size_t y = 0; y < c.object_count(); ++y) {
            auto h = c.hom(obj(x), obj(y));
            CHECK(h.size() == 6);
            for (std::size_t i = 0; i < h.size(); ++i) {
                CHECK(c.hom_position(h[i]) == i);
                if (i)
                    CHECK(index(h[i - 1]) < index(h[i]));
            }
        }
    for (const auto& m : c.morphisms()) {
        auto inv = c.inverse(m.id);
        REQUIRE(inv);
        CHECK(compose(c, *inv, m.id) == c.identity(m.dom));
        CHECK(compose(c, m.id, *inv) == c.identity(m.cod));
    }
}

TEST_CASE("non-invertible arrows have no inverse")
{
    const FiniteCategory c = arrow_category();
    CHECK(validate_category(c).ok());
    CHECK_FALSE(c.inverse(*c.find_morphism("u")));
    CHECK(is_isomorphism(c, *c.find_morphism("1a")));
}

TEST_CASE("compose rejects incompatible pairs")
{
    const FiniteCategory c = arrow_category();
    const MorId u = *c.find_morphism("u");
    CHECK_THROWS_AS(compose(c, u, u), Error);
    try {
        compose(c, u, u);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::composition_undefined);
    }
}

TEST_CASE("a missing entry is reported as composition-total")
{
    const FiniteCategory c = z2_with(mor(1), mor(1), kNoMor);
    const ValidationReport r = validate_category(c);
    CHECK(r.has_violation("composition-total"));
    CHECK_FALSE(r.has_violation("associativity"));
}

TEST_CASE("a corrupted entry breaks associativity or identities")
{
    // a . a = a alone still gives a lawful monoid.
    CHECK(validate_category(z2_with(mor(1), mor(1), mor(1))).ok());
    // a . e = e breaks the identity law and, through it, associativity.
    const ValidationReport r = validate_category(z2_with(mor(1), mor(0), mor(0)));
    CHECK(r.has_violation("right-identity"));
    CHECK(r.has_violation("associativity"));
}

TEST_CASE("builder rejects dangling ids and missing identities")
{
    {
        CategoryBuilder b;
        const ObjId x = b.add_object("x");
        b.add_morphism("f", x, x);
        CHECK_THROWS_AS(std::move(b).build(), Error);
    }
    {
        CategoryBuilder b;
        const ObjId x = b.add_object("x");
        const MorId f = b.add_morphism("f", x, x);
        b.set_identity(x, f);
        b.set_composite_raw(0, 0, 7);
        CHECK_THROWS_AS(std::move(b).build(), Error);
    }
}

TEST_CASE("size guards fail fast")
{
    SizeLimits limits;
    limits.max_hom_set = 5;
    CHECK_THROWS_AS(matrix_groupoid(2, 2, 1, limits), Error);
    limits = {};
    limits.max_objects = 2;
    CHECK_THROWS_AS(matrix_groupoid(2, 1, 3, limits), Error);
}
