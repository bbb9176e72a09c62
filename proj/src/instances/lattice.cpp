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

#include "fatcat/lattice.hpp"

#include <string>

#include "fatcat/error.hpp"

namespace fatcat {

using Elem = FiniteGroup::Elem;

void validate_lattice(const LatticeConnection& l, SizeLimits limits)
{
    if (l.T > limits.max_lattice_extent || l.S > limits.max_lattice_extent)
        fail(Errc::size_guard, "lattice " + std::to_string(l.T) + "x" + std::to_string(l.S) + " exceeds the " +
                                   std::to_string(limits.max_lattice_extent) + " guard");
    auto check = [&](const auto& grid, std::size_t cols, std::size_t rows, const char* what) {
        if (grid.size() != cols)
            fail(Errc::structural, std::string(what) + " needs " + std::to_string(cols) + " columns");
        for (const auto& col : grid) {
            if (col.size() != rows)
                fail(Errc::structural, std::string(what) + " needs " + std::to_string(rows) + " entries per column");
            for (Elem e : col)
                if (e >= l.G.order())
                    fail(Errc::structural, std::string(what) + " label out of range");
        }
    };
    check(l.horiz, l.T, l.S + 1, "horiz");
    check(l.vert, l.T + 1, l.S, "vert");
}

LatticeConnection flat_lattice(const FiniteGroup& g, std::size_t T, std::size_t S)
{
    return LatticeConnection{T, S, g, std::vector(T, std::vector<Elem>(S + 1, g.identity())),
                             std::vector(T + 1, std::vector<Elem>(S, g.identity()))};
}

Elem row_transport(const LatticeConnection& l, std::size_t r, std::size_t t)
{
    if (r > l.S || t > l.T)
        fail(Errc::out_of_range, "row transport outside the lattice");
    Elem acc = l.G.identity();
    for (std::size_t i = 0; i < t; ++i)
        acc = l.G.mul(l.horiz[i][r], acc);
    return acc;
}

Elem column_transport(const LatticeConnection& l, std::size_t c, std::size_t s)
{
    if (c > l.T || s > l.S)
        fail(Errc::out_of_range, "column transport outside the lattice");
    Elem acc = l.G.identity();
    for (std::size_t j = 0; j < s; ++j)
        acc = l.G.mul(l.vert[c][j], acc);
    return acc;
}

Elem biholonomy(const LatticeConnection& l, std::size_t t, std::size_t s)
{
    if (t > l.T || s > l.S)
        fail(Errc::out_of_range, "biholonomy at (" + std::to_string(t) + "," + std::to_string(s) + ") outside " +
                                     std::to_string(l.T) + "x" + std::to_string(l.S));
    const FiniteGroup& G = l.G;
    const Elem bottom = row_transport(l, 0, t);
    const Elem up = column_transport(l, t, s);
    const Elem top = row_transport(l, s, t);
    const Elem left = column_transport(l, 0, s);
    return G.mul(G.inv(left), G.mul(G.inv(top), G.mul(up, bottom)));
}

Elem plaquette_biholonomy(const LatticeConnection& l, std::size_t t, std::size_t s)
{
    if (t >= l.T || s >= l.S)
        fail(Errc::out_of_range, "plaquette (" + std::to_string(t) + "," + std::to_string(s) + ") outside " +
                                     std::to_string(l.T) + "x" + std::to_string(l.S));
    const FiniteGroup& G = l.G;
    return G.mul(G.inv(l.vert[t][s]), G.mul(G.inv(l.horiz[t][s + 1]), G.mul(l.vert[t + 1][s], l.horiz[t][s])));
}

std::vector<std::vector<Elem>> biholonomy_table(const LatticeConnection& l)
{
    std::vector<std::vector<Elem>> out(l.T + 1, std::vector<Elem>(l.S + 1));
    for (std::size_t t = 0; t <= l.T; ++t)
        for (std::size_t s = 0; s <= l.S; ++s)
            out[t][s] = biholonomy(l, t, s);
    return out;
}

LatticeConnection columns(const LatticeConnection& l, std::size_t t0, std::size_t t1)
{
    if (t0 > t1 || t1 > l.T)
        fail(Errc::out_of_range, "column range outside the lattice");
    LatticeConnection out{t1 - t0, l.S, l.G, {}, {}};
    out.horiz.assign(l.horiz.begin() + static_cast<std::ptrdiff_t>(t0), l.horiz.begin() + static_cast<std::ptrdiff_t>(t1));
    out.vert.assign(l.vert.begin() + static_cast<std::ptrdiff_t>(t0), l.vert.begin() + static_cast<std::ptrdiff_t>(t1 + 1));
    return out;
}

}  // namespace fatcat
