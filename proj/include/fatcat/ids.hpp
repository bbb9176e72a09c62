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

#include <cstdint>
#include <cstddef>
#include <functional>

namespace fatcat {

// Dense indices; strong enums keep object and morphism ids from mixing.
enum class ObjId : std::uint32_t {};
enum class MorId : std::uint32_t {};

inline constexpr std::size_t index(ObjId x) noexcept { return static_cast<std::size_t>(x); }
inline constexpr std::size_t index(MorId f) noexcept { return static_cast<std::size_t>(f); }

inline constexpr ObjId obj(std::size_t i) noexcept { return static_cast<ObjId>(i); }
inline constexpr MorId mor(std::size_t i) noexcept { return static_cast<MorId>(i); }

inline constexpr ObjId kNoObj = static_cast<ObjId>(0xffffffffu);
inline constexpr MorId kNoMor = static_cast<MorId>(0xffffffffu);

/// Limits that keep exhaustive checks desk-scale.
struct SizeLimits {
    std::size_t max_hom_set = 512;
    std::size_t max_objects = 16;
    std::size_t max_morphisms = 4096;
    std::size_t max_lattice_extent = 32;
};

/// Execution policy for the exhaustive sweeps.
enum class Exec { serial, parallel };

}  // namespace fatcat
