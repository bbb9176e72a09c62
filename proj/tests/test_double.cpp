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

#include "fatcat/double.hpp"
#include "fatcat/error.hpp"
#include "fatcat/group.hpp"
#include "fatcat/matrix.hpp"
#include "oracles.hpp"

using namespace fatcat;

namespace {

const oracle::Perm kPerms[] = {oracle::e, oracle::t23, oracle::t12, oracle::c123, oracle::c132, oracle::t13};

std::size_t perm_index(const oracle::Perm& p)
{
    return static_cast<std::size_t>(std::find(std::begin(kPerms), std::end(kPerms), p) - std::begin(kPerms));
}

oracle::Perm inv(const oracle::Perm& p)
{
    oracle::Perm q{};
    for (int i = 0; i < 3; ++i)
        q[p[i]] = i;
    return q;
}

// S3 square over identities whose h swaps (12) and (13): not induced.
Square twisted_s3_square(const FiniteCategory& c)
{
    const FatObject x = fat_object(c, mor(0));
    HomMap h{x.x, x.y, x.x, x.y, {mor(0), mor(1), mor(5), mor(3), mor(4), mor(2)}};
    return Square::make(c, make_fat_morphism(c, x, x, mor(0), mor(0), h));
}

}  // namespace

TEST_CASE("horizontal composite follows the pasting formula")
{
    const FiniteCategory c = group_as_groupoid(symmetric_group(3));
    const auto squares = induced_squares(c);
    std::size_t pairs = 0;
    for (const auto& left : squares)
        for (const auto& right : squares) {
            if (right.g1() != left.g2())
                continue;
            ++pairs;
            const Square hc = horizontal_compose(c, left, right);
            const oracle::Perm f1 = kPerms[index(left.src().f)];
            const oracle::Perm h_f1 = kPerms[index(left.h().apply(c, left.src().f))];
            for (std::size_t f = 0; f < 6; ++f) {
                const oracle::Perm arg = oracle::compose(kPerms[f], inv(f1));
                const oracle::Perm expect =
                    oracle::compose(kPerms[index(right.h().apply(c, mor(perm_index(arg))))], h_f1);
                CHECK(hc.h().table[f] == mor(perm_index(expect)));
            }
            // Defining condition of the composite.
            CHECK(hc.h().apply(c, hc.src().f) == hc.dst().f);
            CHECK(hc.src().f == compose(c, right.src().f, left.src().f));
            CHECK(hc.dst().f == compose(c, right.dst().f, left.dst().f));
        }
    // Each square has 36 right partners: one per (f1, g2) with g1 fixed.
    CHECK(pairs == 216 * 36);
}

TEST_CASE("horizontal composition needs a shared vertical")
{
    const FiniteCategory c = group_as_groupoid(cyclic_group(3));
    const Square a = horizontal_identity(c, mor(1));
    const Square b = horizontal_identity(c, mor(2));
    try {
        horizontal_compose(c, a, b);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::shared_vertical_mismatch);
    }
}

TEST_CASE("horizontal units: left law always, right law on induced squares")
{
    const FiniteCategory c = group_as_groupoid(symmetric_group(3));
    std::vector<Square> squares = induced_squares(c);
    for (const auto& s : squares) {
        CHECK(horizontal_compose(c, horizontal_identity(c, s.g1()), s) == s);
        CHECK(horizontal_compose(c, s, horizontal_identity(c, s.g2())) == s);
    }
    const Square twisted = twisted_s3_square(c);
    CHECK(horizontal_compose(c, horizontal_identity(c, twisted.g1()), twisted) == twisted);
    CHECK(horizontal_compose(c, twisted, horizontal_identity(c, twisted.g2())) != twisted);
}

TEST_CASE("horizontal composition is associative")
{
    for (const FiniteCategory& c : {group_as_groupoid(cyclic_group(3)), matrix_groupoid(3, 1, 2).category}) {
        const auto squares = induced_squares(c);
        std::size_t triples = 0;
        for (const auto& a : squares)
            for (const auto& b : squares) {
                if (b.g1() != a.g2())
                    continue;
                const Square ab = horizontal_compose(c, a, b);
                for (const auto& d : squares) {
                    if (d.g1() != b.g2())
                        continue;
                    ++triples;
                    CHECK(horizontal_compose(c, ab, d) == horizontal_compose(c, a, horizontal_compose(c, b, d)));
                }
            }
        CHECK(triples > 0);
    }
}

TEST_CASE("interchange on an explicit grid")
{
    const FiniteCategory c = group_as_groupoid(symmetric_group(3));
    const MorId t12 = *c.find_morphism("(12)");
    const MorId c123 = *c.find_morphism("(123)");
    const MorId t23 = *c.find_morphism("(23)");
    auto induced = [&](MorId f1, MorId g1, MorId g2) {
        const MorId f2 = compose(c, compose(c, g2, f1), *c.inverse(g1));
        return Square::make(c, induced_from_square(c, f1, f2, g1, g2));
    };
    const Square tl = induced(t12, c123, t23);
    const Square tr = induced(c123, t23, t12);
    const Square bl = induced(tl.dst().f, t12, c123);
    const Square br = induced(tr.dst().f, c123, t23);
    const InterchangeOutcome out = verify_interchange(c, {tl, tr, bl, br});
    CHECK(out.holds);
    CHECK(out.rows_first == out.columns_first);

    try {
        verify_interchange(c, {tl, tr, br, bl});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_pasteable);
    }
}

TEST_CASE("interchange grid counts match naive enumeration")
{
    for (std::size_t n : {2, 3}) {
        const FiniteCategory c = group_as_groupoid(cyclic_group(n));
        const auto sq = induced_squares(c);
        std::uint64_t grids = 0, pairs = 0;
        for (const auto& tl : sq)
            for (const auto& tr : sq) {
                if (tr.g1() != tl.g2())
                    continue;
                ++pairs;
                for (const auto& bl : sq) {
                    if (bl.src() != tl.dst())
                        continue;
                    for (const auto& br : sq)
                        if (br.src() == tr.dst() && br.g1() == bl.g2())
                            ++grids;
                }
            }
        const ValidationReport r = sweep_interchange(c);
        CHECK(r.ok());
        CHECK(r.checks("interchange") == grids);
        CHECK(r.checks("defining-condition") == pairs);
        std::uint64_t n8 = 1;
        for (int i = 0; i < 8; ++i)
            n8 *= n;
        CHECK(grids == n8);
    }
}

TEST_CASE("interchange sweep on s3 visits every grid")
{
    const ValidationReport r = sweep_interchange(group_as_groupoid(symmetric_group(3)));
    CHECK(r.ok());
    CHECK(r.checks("interchange") == 1679616);  // 6^8
    CHECK(r.checks("defining-condition") == 7776);
}

TEST_CASE("right translation precomposes")
{
    const FiniteCategory c = matrix_groupoid(2, 2, 2).category;
    for (const auto& m : c.morphisms())
        for (std::size_t z = 0; z < c.object_count(); ++z) {
            const HomMap r = right_translation(c, m.id, obj(z));
            const auto src = c.hom(m.cod, obj(z));
            REQUIRE(r.table.size() == src.size());
            for (std::size_t i = 0; i < src.size(); ++i)
                CHECK(r.table[i] == compose(c, src[i], m.id));
            CHECK(is_bijection(c, r));
        }
}

TEST_CASE("enrichment closure for two-sided translations")
{
    for (const FiniteCategory& c : {group_as_groupoid(symmetric_group(3)), matrix_groupoid(2, 2, 2).category}) {
        const ValidationReport r = verify_enrichment_closure(c, two_sided_translation_predicate());
        CHECK(r.ok());
        CHECK(r.checks("translation-membership") > 0);
        CHECK(r.checks("vertical-closure") > 0);
        CHECK(r.checks("horizontal-closure") > 0);
        CHECK(r.checks("factorization") == r.checks("horizontal-closure"));
    }
}

TEST_CASE("identity predicate fails the translation precondition")
{
    const FiniteCategory c = group_as_groupoid(symmetric_group(3));
    const ValidationReport r = verify_enrichment_closure(c, identity_predicate());
    CHECK(r.has_violation("translation-membership"));
    CHECK(r.checks("member-cells") == 0);
    CHECK(r.checks("vertical-closure") == 0);
}

TEST_CASE("twisted squares are not two-sided translations")
{
    const FiniteCategory c = group_as_groupoid(symmetric_group(3));
    const Square twisted = twisted_s3_square(c);
    CHECK_FALSE(two_sided_translation_predicate().test(c, twisted.h()));
    CHECK(always_predicate().test(c, twisted.h()));
    const std::vector<Square> extra{twisted};
    const ValidationReport r = verify_enrichment_closure(c, always_predicate(), extra);
    CHECK(r.checks("member-cells") == 217);
    CHECK_FALSE(predicate_by_name("no-such"));
}

TEST_CASE("squares require invertible edges")
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
    const FiniteCategory c = std::move(b).build();
    const FatMorphism cell = induced_from_square(c, u, u, ia, ib);
    try {
        Square::make(c, cell);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_invertible);
    }
    CHECK(induced_squares(c).size() == 2);
}
