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

#include "fatcat/reference.hpp"

#include "fatcat/error.hpp"

namespace fatcat::reference {

ValidationReport verify_lemma1(const FiniteCategory& c)
{
    guard_lemma1(c);
    ValidationReport report;
    const auto squares = commuting_squares(c);
    for (const auto& u : squares) {
        const FatMorphism lower = induced_from_square(c, u.f1, u.f2, u.g1, u.g2);
        std::uint64_t checked = 0;
        for (const auto& v : squares) {
            if (v.f1 != u.f2)
                continue;
            ++checked;
            const FatMorphism upper = induced_from_square(c, v.f1, v.f2, v.g1, v.g2);
            try {
                const FatMorphism pasted =
                    induced_from_square(c, u.f1, v.f2, compose(c, v.g1, u.g1), compose(c, v.g2, u.g2));
                if (vertical_compose(c, upper, lower) != pasted)
                    report.add({"lemma1", {describe(c, u.f1), describe(c, v.f2)}, "cells differ"});
            } catch (const Error& e) {
                report.add({"lemma1", {describe(c, u.f1), describe(c, v.f2)}, e.what()});
            }
        }
        report.count("lemma1", checked);
    }
    return report;
}

ValidationReport sweep_interchange(const FiniteCategory& c, std::span<const Square> extra)
{
    std::vector<Square> pool = induced_squares(c);
    pool.insert(pool.end(), extra.begin(), extra.end());

    ValidationReport report;
    for (const Square& tl : pool) {
        std::uint64_t grids = 0;
        std::uint64_t defining = 0;
        for (const Square& tr : pool) {
            if (tr.g1() != tl.g2())
                continue;
            ++defining;
            const Square top = horizontal_compose(c, tl, tr);
            if (top.h().apply(c, top.src().f) != top.dst().f)
                report.add({"defining-condition", {describe(c, tl.src().f), describe(c, tr.src().f)}, "h''(f1' f1) != f2' f2"});
            for (const Square& bl : pool) {
                if (bl.src() != tl.dst())
                    continue;
                for (const Square& br : pool) {
                    if (br.src() != tr.dst() || br.g1() != bl.g2())
                        continue;
                    ++grids;
                    const auto outcome = verify_interchange(c, SquareGrid{tl, tr, bl, br});
                    if (!outcome.holds)
                        report.add({"interchange", {describe(c, tl.src().f), describe(c, tr.src().f)}, "bracketings differ"});
                }
            }
        }
        report.count("interchange", grids);
        report.count("defining-condition", defining);
    }
    return report;
}

}  // namespace fatcat::reference
