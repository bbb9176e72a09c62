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

#include <charconv>
#include <functional>
#include <map>

#include "fatcat/document.hpp"
#include "fatcat/error.hpp"
#include "fatcat/group.hpp"
#include "fatcat/matrix.hpp"

namespace fatcat {

FiniteGroup named_group(const std::string& name)
{
    std::size_t n = 0;
    const char* first = name.data() + 1;
    const char* last = name.data() + name.size();
    const bool numeric = name.size() > 1 && std::from_chars(first, last, n).ptr == last;
    if (numeric && name[0] == 'z' && n >= 1 && n <= 64)
        return cyclic_group(n);
    if (numeric && name[0] == 's' && n >= 1 && n <= 5)
        return symmetric_group(n);
    fail(Errc::parse, "unknown group '" + name + "' (expected zN with N <= 64 or sK with K <= 5)");
}

namespace {

// Z_n acting on itself by multiplication, with fixed unitor components.
MonoidalStructure group_product(const FiniteGroup& g, FiniteGroup::Elem unitor)
{
    const FiniteCategory c = group_as_groupoid(g);
    MonoidalStructure m(c, obj(0));
    m.set_tensor(obj(0), obj(0), obj(0));
    for (FiniteGroup::Elem a = 0; a < g.order(); ++a)
        for (FiniteGroup::Elem b = 0; b < g.order(); ++b)
            m.set_tensor(mor(a), mor(b), mor(g.mul(a, b)));
    m.set_associator(obj(0), obj(0), obj(0), mor(g.identity()));
    m.set_left_unitor(obj(0), mor(unitor));
    m.set_right_unitor(obj(0), mor(unitor));
    return m;
}

MonoidalStructure corrupted_dsum3(SizeLimits limits)
{
    const MatrixGroupoid g = graded_matrix_groupoid(2, 3, limits);
    MonoidalStructure m = direct_sum_monoidal(g);
    const ObjId v2 = *g.category.find_object("V2");
    const ObjId v0 = *g.category.find_object("V0");
    m.set_associator(v2, v0, v0, *g.lookup(v2, v2, Matrix{2, 2, 2, {0, 1, 1, 0}}));
    return m;
}

LatticeConnection labelled_lattice(const FiniteGroup& g, std::size_t T, std::size_t S,
                                   const std::function<std::size_t(std::size_t, std::size_t)>& h,
                                   const std::function<std::size_t(std::size_t, std::size_t)>& v)
{
    LatticeConnection l = flat_lattice(g, T, S);
    for (std::size_t t = 0; t < T; ++t)
        for (std::size_t s = 0; s <= S; ++s)
            l.horiz[t][s] = static_cast<FiniteGroup::Elem>(h(t, s) % g.order());
    for (std::size_t t = 0; t <= T; ++t)
        for (std::size_t s = 0; s < S; ++s)
            l.vert[t][s] = static_cast<FiniteGroup::Elem>(v(t, s) % g.order());
    return l;
}

using Factory = std::function<SpecDocument(SizeLimits)>;

const std::map<std::string, Factory>& registry()
{
    static const std::map<std::string, Factory> r = [] {
        std::map<std::string, Factory> m;
        for (std::size_t n = 1; n <= 4; ++n)
            m["z" + std::to_string(n)] = [n](SizeLimits) { return SpecDocument{group_as_groupoid(cyclic_group(n))}; };
        m["s3"] = [](SizeLimits) { return SpecDocument{group_as_groupoid(symmetric_group(3))}; };
        m["gl2f2"] = [](SizeLimits l) { return SpecDocument{matrix_groupoid(2, 2, 2, l).category}; };
        m["gl2f2k1"] = [](SizeLimits l) { return SpecDocument{matrix_groupoid(2, 2, 1, l).category}; };
        m["gl1f3"] = [](SizeLimits l) { return SpecDocument{matrix_groupoid(3, 1, 2, l).category}; };
        m["dsum2"] = [](SizeLimits l) { return SpecDocument{direct_sum_monoidal(graded_matrix_groupoid(2, 2, l))}; };
        m["dsum3"] = [](SizeLimits l) { return SpecDocument{direct_sum_monoidal(graded_matrix_groupoid(2, 3, l))}; };
        m["dsum3-bad-assoc"] = [](SizeLimits l) { return SpecDocument{corrupted_dsum3(l)}; };
        m["z2prod"] = [](SizeLimits) { return SpecDocument{group_product(cyclic_group(2), 0)}; };
        m["z3unitor"] = [](SizeLimits) { return SpecDocument{group_product(cyclic_group(3), 1)}; };
        m["conj-s3"] = [](SizeLimits) { return SpecDocument{conjugation_crossed_module(symmetric_group(3))}; };
        m["trivial-s3"] = [](SizeLimits) {
            return SpecDocument{trivial_crossed_module(symmetric_group(3), symmetric_group(3))};
        };
        m["trivial-z4"] = [](SizeLimits) {
            return SpecDocument{trivial_crossed_module(symmetric_group(3), cyclic_group(4))};
        };
        m["flat-z4"] = [](SizeLimits) { return SpecDocument{flat_lattice(cyclic_group(4), 3, 3)}; };
        m["lattice-z4"] = [](SizeLimits) {
            return SpecDocument{labelled_lattice(
                cyclic_group(4), 3, 3, [](auto t, auto s) { return t + 2 * s + 1; },
                [](auto t, auto s) { return 3 * t + s; })};
        };
        m["lattice-s3"] = [](SizeLimits) {
            return SpecDocument{labelled_lattice(
                symmetric_group(3), 3, 3, [](auto t, auto s) { return t + 2 * s + 1; },
                [](auto t, auto s) { return 3 * t + s + 2; })};
        };
        return m;
    }();
    return r;
}

}  // namespace

std::vector<std::string> builtin_names()
{
    std::vector<std::string> out;
    for (const auto& [name, f] : registry())
        out.push_back(name);
    return out;
}

SpecDocument builtin(const std::string& name, SizeLimits limits)
{
    auto it = registry().find(name);
    if (it == registry().end())
        fail(Errc::parse, "unknown builtin '" + name + "'");
    SpecDocument doc = it->second(limits);
    // Builtins honour the same guards as loaded files.
    if (const FiniteCategory* c = doc.category(); c && c->max_hom_size() > limits.max_hom_set)
        fail(Errc::size_guard, "builtin '" + name + "' has a hom-set of " + std::to_string(c->max_hom_size()) +
                                   " morphisms, above the limit of " + std::to_string(limits.max_hom_set));
    if (auto* l = std::get_if<LatticeConnection>(&doc.body))
        validate_lattice(*l, limits);
    return doc;
}

}  // namespace fatcat
