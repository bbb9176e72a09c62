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

// Independent reference computations used to derive expected values. None of
// these call into the library's algebra.

#include <array>
#include <cstdint>
#include <vector>

namespace oracle {

// Permutations of {0,1,2} as image arrays; compose(a, b) applies b first.
using Perm = std::array<int, 3>;

inline Perm compose(const Perm& a, const Perm& b)
{
    return {a[b[0]], a[b[1]], a[b[2]]};
}

inline constexpr Perm e{0, 1, 2};
inline constexpr Perm t23{0, 2, 1};
inline constexpr Perm t12{1, 0, 2};
inline constexpr Perm c123{1, 2, 0};
inline constexpr Perm c132{2, 0, 1};
inline constexpr Perm t13{2, 1, 0};

// Determinant mod p of a d x d row-major matrix by cofactor expansion.
inline long det(const std::vector<long>& m, int d, long p)
{
    if (d == 0)
        return 1;
    if (d == 1)
        return ((m[0] % p) + p) % p;
    long acc = 0;
    for (int c = 0; c < d; ++c) {
        std::vector<long> minor;
        for (int r = 1; r < d; ++r)
            for (int k = 0; k < d; ++k)
                if (k != c)
                    minor.push_back(m[r * d + k]);
        const long term = m[c] * det(minor, d - 1, p) % p;
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return ((acc % p) + p) % p;
}

// Number of invertible d x d matrices over F_p by brute-force determinant.
inline std::size_t count_invertible(int d, long p)
{
    std::size_t total = 1;
    for (int i = 0; i < d * d; ++i)
        total *= static_cast<std::size_t>(p);
    std::size_t hits = 0;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<long> m(d * d);
        std::size_t c = code;
        for (int i = 0; i < d * d; ++i) {
            m[i] = static_cast<long>(c % p);
            c /= p;
        }
        if (det(m, d, p) != 0)
            ++hits;
    }
    return hits;
}

// Block-diagonal matrix written out entry by entry.
inline std::vector<std::uint32_t> block(const std::vector<std::uint32_t>& a, std::size_t da,
                                        const std::vector<std::uint32_t>& b, std::size_t db)
{
    const std::size_t n = da + db;
    std::vector<std::uint32_t> out(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i < da && j < da)
                out[i * n + j] = a[i * da + j];
            else if (i >= da && j >= da)
                out[i * n + j] = b[(i - da) * db + (j - da)];
        }
    return out;
}

}  // namespace oracle
