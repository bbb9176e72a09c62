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

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>

#if defined(__SSSE3__)
#include <tmmintrin.h>
#endif

namespace fatcat::kernels {

// A hom-map as positions: entry i is the position, inside the target hom-set,
// of the image of the i-th source morphism. Lanes past the hom-set size are
// padding and never compared.
template <std::size_t N>
struct PosTable {
    alignas(16) std::array<std::uint8_t, N> v{};
};

using Narrow = PosTable<16>;
using Wide = PosTable<256>;

// then(outer, inner)[i] = outer[inner[i]]
inline Narrow then(const Narrow& outer, const Narrow& inner, std::size_t /*n*/)
{
    Narrow out;
#if defined(__SSSE3__)
    const __m128i o = _mm_load_si128(reinterpret_cast<const __m128i*>(outer.v.data()));
    const __m128i i = _mm_load_si128(reinterpret_cast<const __m128i*>(inner.v.data()));
    _mm_store_si128(reinterpret_cast<__m128i*>(out.v.data()), _mm_shuffle_epi8(o, i));
#else
    for (std::size_t k = 0; k < 16; ++k)
        out.v[k] = outer.v[inner.v[k] & 0x0f];
#endif
    return out;
}

inline bool same(const Narrow& a, const Narrow& b, std::size_t n)
{
#if defined(__SSSE3__)
    const __m128i x = _mm_load_si128(reinterpret_cast<const __m128i*>(a.v.data()));
    const __m128i y = _mm_load_si128(reinterpret_cast<const __m128i*>(b.v.data()));
    const unsigned mask = (1u << n) - 1u;
    return (static_cast<unsigned>(_mm_movemask_epi8(_mm_cmpeq_epi8(x, y))) & mask) == mask;
#else
    return std::memcmp(a.v.data(), b.v.data(), n) == 0;
#endif
}

inline Wide then(const Wide& outer, const Wide& inner, std::size_t n)
{
    Wide out;
    for (std::size_t k = 0; k < n; ++k)
        out.v[k] = outer.v[inner.v[k]];
    return out;
}

inline bool same(const Wide& a, const Wide& b, std::size_t n) { return std::memcmp(a.v.data(), b.v.data(), n) == 0; }

}  // namespace fatcat::kernels
