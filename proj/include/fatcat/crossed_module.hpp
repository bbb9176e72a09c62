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
#include "fatcat/report.hpp"

namespace fatcat {

/// tau: H -> G and an action alpha of G on H, both as tables.
struct CrossedModule {
    FiniteGroup G;
    FiniteGroup H;
    std::vector<FiniteGroup::Elem> tau;                 // by element of H
    std::vector<std::vector<FiniteGroup::Elem>> alpha;  // alpha[g][h]

    bool operator==(const CrossedModule&) const = default;
};

/// Exhaustive check. Laws: "tau-homomorphism" per (h, h'),
/// "alpha-automorphism" per (g, h, h') plus one bijectivity check per g,
/// "alpha-action" per (g, g', h) plus the unit per h, "peiffer1" per (g, h),
/// "peiffer2" per (h, h'). Throws Error(structural) on malformed tables.
ValidationReport verify_crossed_module(const CrossedModule& cm);

/// H = G, tau = id, alpha = conjugation.
CrossedModule conjugation_crossed_module(const FiniteGroup& g);

/// tau constant at the identity, alpha trivial.
CrossedModule trivial_crossed_module(const FiniteGroup& g, const FiniteGroup& h);

}  // namespace fatcat
