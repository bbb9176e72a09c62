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

#include "fatcat/group.hpp"

#include <algorithm>
#include <numeric>

#include "fatcat/error.hpp"

namespace fatcat {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Elem>> table, std::vector<std::string> names)
{
    const std::size_t n = table.size();
    if (n == 0)
        fail(Errc::structural, "group table is empty");
    for (const auto& row : table) {
        if (row.size() != n)
            fail(Errc::structural, "group table is not square");
        for (Elem v : row)
            if (v >= n)
                fail(Errc::structural, "group table entry " + std::to_string(v) + " out of range");
    }
    if (names.empty())
        for (std::size_t i = 0; i < n; ++i)
            names.push_back(std::to_string(i));
    if (names.size() != n)
        fail(Errc::structural, "group has " + std::to_string(n) + " elements but " + std::to_string(names.size()) +
                                   " names");

    FiniteGroup g;
    g.table_ = std::move(table);
    g.names_ = std::move(names);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (g.names_[a] == g.names_[b])
                fail(Errc::structural, "duplicate element name '" + g.names_[a] + "'");

    std::optional<Elem> e;
    for (Elem a = 0; a < n && !e; ++a) {
        bool unit = true;
        for (Elem b = 0; b < n && unit; ++b)
            unit = g.table_[a][b] == b && g.table_[b][a] == b;
        if (unit)
            e = a;
    }
    if (!e)
        fail(Errc::structural, "group table has no identity");
    g.identity_ = *e;

    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                if (g.table_[g.table_[a][b]][c] != g.table_[a][g.table_[b][c]])
                    fail(Errc::structural, "group table is not associative at (" + g.names_[a] + "," + g.names_[b] +
                                               "," + g.names_[c] + ")");

    g.inverse_.assign(n, 0);
    for (Elem a = 0; a < n; ++a) {
        auto row = std::find(g.table_[a].begin(), g.table_[a].end(), *e);
        if (row == g.table_[a].end())
            fail(Errc::structural, "element " + g.names_[a] + " has no inverse");
        const Elem b = static_cast<Elem>(row - g.table_[a].begin());
        if (g.table_[b][a] != *e)
            fail(Errc::structural, "element " + g.names_[a] + " has no two-sided inverse");
        g.inverse_[a] = b;
    }
    return g;
}

std::optional<FiniteGroup::Elem> FiniteGroup::find(std::string_view name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<Elem>(it - names_.begin());
}

bool FiniteGroup::is_abelian() const
{
    for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b = a + 1; b < order(); ++b)
            if (table_[a][b] != table_[b][a])
                return false;
    return true;
}

FiniteGroup cyclic_group(std::size_t n)
{
    if (n == 0)
        fail(Errc::structural, "cyclic group of order 0");
    std::vector<std::vector<FiniteGroup::Elem>> t(n, std::vector<FiniteGroup::Elem>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            t[a][b] = static_cast<FiniteGroup::Elem>((a + b) % n);
    return FiniteGroup::from_table(std::move(t));
}

namespace {

std::string cycle_name(const std::vector<int>& p)
{
    std::string out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i))
            continue;
        out += '(';
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = true;
            out += std::to_string(j + 1);
        }
        out += ')';
    }
    return out.empty() ? "e" : out;
}

}  // namespace

FiniteGroup symmetric_group(std::size_t k)
{
    if (k == 0 || k > 5)
        fail(Errc::size_guard, "symmetric_group supports 1 <= k <= 5");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    const std::size_t n = perms.size();
    std::vector<std::string> names;
    for (const auto& q : perms)
        names.push_back(cycle_name(q));
    std::vector<std::vector<FiniteGroup::Elem>> t(n, std::vector<FiniteGroup::Elem>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<int> ab(k);
            for (std::size_t i = 0; i < k; ++i)
                ab[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
            t[a][b] = static_cast<FiniteGroup::Elem>(std::lower_bound(perms.begin(), perms.end(), ab) - perms.begin());
        }
    }
    return FiniteGroup::from_table(std::move(t), std::move(names));
}

FiniteCategory group_as_groupoid(const FiniteGroup& g, std::string object)
{
    CategoryBuilder b;
    const ObjId x = b.add_object(std::move(object));
    std::vector<MorId> m;
    for (std::size_t a = 0; a < g.order(); ++a)
        m.push_back(b.add_morphism(g.name(static_cast<FiniteGroup::Elem>(a)), x, x));
    b.set_identity(x, m[g.identity()]);
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t c = 0; c < g.order(); ++c)
            b.set_composite(m[a], m[c], m[g.mul(static_cast<FiniteGroup::Elem>(a), static_cast<FiniteGroup::Elem>(c))]);
    return std::move(b).build();
}

}  // namespace fatcat
