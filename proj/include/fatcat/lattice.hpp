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

#pragma once

#include <vector>

#include "fatcat/group.hpp"

namespace fatcat {

/// Group-valued edge labels on the grid {0..T} x {0..S}.
///
/// horiz[t][s] transports along (t,s) -> (t+1,s) for t < T, s <= S;
/// vert[t][s] transports along (t,s) -> (t,s+1) for t <= T, s < S.
/// Transports compose right to left: a path a then b carries b * a.
struct LatticeConnection {
    std::size_t T = 0;
    std::size_t S = 0;
    FiniteGroup G;
    std::vector<std::vector<FiniteGroup::Elem>> horiz;
    std::vector<std::vector<FiniteGroup::Elem>> vert;

    bool operator==(const LatticeConnection&) const = default;
};

/// Throws Error(structural) on ragged or out-of-range tables and
/// Error(size_guard) when T or S exceeds the lattice guard.
void validate_lattice(const LatticeConnection& l, SizeLimits limits = {});

/// All labels set to the identity.
LatticeConnection flat_lattice(const FiniteGroup& g, std::size_t T, std::size_t S);

/// horiz(t-1,r) ... horiz(0,r): along row r from column 0 to column t.
FiniteGroup::Elem row_transport(const LatticeConnection& l, std::size_t r, std::size_t t);

/// vert(c,s-1) ... vert(c,0): up column c from row 0 to row s.
FiniteGroup::Elem column_transport(const LatticeConnection& l, std::size_t c, std::size_t s);

/// V_0(s)^-1 H_s(t)^-1 V_t(s) H_0(t): along the bottom, up, back, down.
/// Throws Error(out_of_range) unless t <= T and s <= S.
FiniteGroup::Elem biholonomy(const LatticeConnection& l, std::size_t t, std::size_t s);

/// vert(t,s)^-1 horiz(t,s+1)^-1 vert(t+1,s) horiz(t,s), for t < T and s < S.
FiniteGroup::Elem plaquette_biholonomy(const LatticeConnection& l, std::size_t t, std::size_t s);

/// table[t][s] = biholonomy(l, t, s) for all t <= T, s <= S.
std::vector<std::vector<FiniteGroup::Elem>> biholonomy_table(const LatticeConnection& l);

/// The sub-lattice on columns t0..t1, reindexed from 0.
LatticeConnection columns(const LatticeConnection& l, std::size_t t0, std::size_t t1);

}  // namespace fatcat
