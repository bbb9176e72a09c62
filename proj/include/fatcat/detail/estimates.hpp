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

// Closed-form counts used by the size guards of the exhaustive sweeps.

#include <vector>

#include "fatcat/category.hpp"

namespace fatcat::detail {

struct OutDegrees {
    std::vector<double> all;
    std::vector<double> iso;
};

inline OutDegrees out_degrees(const FiniteCategory& c)
{
    OutDegrees d{std::vector<double>(c.object_count(), 0), std::vector<double>(c.object_count(), 0)};
    for (const auto& m : c.morphisms()) {
        d.all[index(m.dom)] += 1;
        if (c.inverse(m.id))
            d.iso[index(m.dom)] += 1;
    }
    return d;
}

/// Commuting squares with invertible left vertical. With `iso_right` every
/// edge must be invertible, which counts the induced squares.
inline double square_count(const FiniteCategory& c, bool iso_right)
{
    const OutDegrees d = out_degrees(c);
    const auto& right = iso_right ? d.iso : d.all;
    double total = 0;
    for (const auto& m : c.morphisms())
        if (!iso_right || c.inverse(m.id))
            total += d.iso[index(m.dom)] * right[index(m.cod)];
    return total;
}

/// Vertically stackable pairs of commuting squares with invertible left verticals.
inline double stacked_pair_count(const FiniteCategory& c)
{
    const OutDegrees d = out_degrees(c);
    std::vector<double> a(c.object_count(), 0), b(c.object_count(), 0);
    for (const auto& m : c.morphisms()) {
        if (c.inverse(m.id))
            a[index(m.dom)] += d.iso[index(m.cod)];
        b[index(m.dom)] += d.all[index(m.cod)];
    }
    double total = 0;
    for (const auto& m : c.morphisms())
        total += a[index(m.dom)] * b[index(m.cod)];
    return total;
}

}  // namespace fatcat::detail
