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

// Exhaustive check that induced cells compose like their pasted squares.

#include <string>
#include <vector>

#include "fatcat/detail/estimates.hpp"
#include "fatcat/detail/sharded.hpp"
#include "fatcat/error.hpp"
#include "fatcat/fat.hpp"

namespace fatcat {

void guard_lemma1(const FiniteCategory& c)
{
    constexpr double kMaxSquares = double(std::size_t{1} << 20);
    constexpr double kMaxWork = 4.0e9;
    if (detail::square_count(c, false) > kMaxSquares)
        fail(Errc::size_guard, "too many commuting squares for an exhaustive lemma1 sweep");
    const double work = detail::stacked_pair_count(c) * static_cast<double>(c.max_hom_size());
    if (work > kMaxWork)
        fail(Errc::size_guard, "lemma1 sweep would evaluate up to " + std::to_string(work) + " table entries");
}

ValidationReport verify_lemma1(const FiniteCategory& c, Exec exec)
{
    guard_lemma1(c);
    const std::vector<CommutingSquare> squares = commuting_squares(c);

    // Induced h-tables as positions, stored flat.
    std::vector<std::size_t> offset(squares.size() + 1, 0);
    for (std::size_t i = 0; i < squares.size(); ++i)
        offset[i + 1] = offset[i] + c.hom(c.dom(squares[i].f1), c.cod(squares[i].f1)).size();
    std::vector<std::uint16_t> tables(offset.back());
    for (std::size_t i = 0; i < squares.size(); ++i) {
        const auto& s = squares[i];
        const MorId g1_inv = *c.inverse(s.g1);
        const auto src = c.hom(c.dom(s.f1), c.cod(s.f1));
        for (std::size_t k = 0; k < src.size(); ++k)
            tables[offset[i] + k] = static_cast<std::uint16_t>(
                c.hom_position(c.composite_unchecked(c.composite_unchecked(s.g2, src[k]), g1_inv)));
    }

    std::vector<std::vector<std::uint32_t>> by_top(c.morphism_count());
    for (std::uint32_t i = 0; i < squares.size(); ++i)
        by_top[index(squares[i].f1)].push_back(i);

    return detail::sharded_sweep(squares.size(), exec, [&](std::size_t i, ValidationReport& r) {
        const CommutingSquare& u = squares[i];
        const ObjId x1 = c.dom(u.f1), y1 = c.cod(u.f1);
        const auto src = c.hom(x1, y1);
        std::uint64_t checked = 0;
        for (std::uint32_t j : by_top[index(u.f2)]) {
            const CommutingSquare& v = squares[j];
            ++checked;
            const MorId left = c.composite_unchecked(v.g1, u.g1);
            const MorId right = c.composite_unchecked(v.g2, u.g2);
            const auto left_inv = c.inverse(left);
            auto witness = [&] {
                return std::vector<std::string>{describe(c, u.f1), describe(c, u.g1), describe(c, u.g2),
                                                describe(c, v.f2), describe(c, v.g1), describe(c, v.g2)};
            };
            if (!left_inv || c.composite_unchecked(right, u.f1) != c.composite_unchecked(v.f2, left)) {
                r.add({"lemma1", witness(), "pasted square does not commute or has a non-invertible left vertical"});
                continue;
            }
            for (std::size_t k = 0; k < src.size(); ++k) {
                const std::uint16_t stacked = tables[offset[j] + tables[offset[i] + k]];
                const MorId pasted = c.composite_unchecked(c.composite_unchecked(right, src[k]), *left_inv);
                if (stacked != c.hom_position(pasted)) {
                    r.add({"lemma1", witness(),
                           "composite of induced cells differs from the pasted cell at " + describe(c, src[k])});
                    break;
                }
            }
        }
        r.count("lemma1", checked);
    });
}

}  // namespace fatcat
