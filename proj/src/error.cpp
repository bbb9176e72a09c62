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

#include "fatcat/error.hpp"

namespace fatcat {

std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::structural: return "structural";
    case Errc::composition_undefined: return "composition-undefined";
    case Errc::endpoint_mismatch: return "endpoint-mismatch";
    case Errc::defining_condition: return "defining-condition";
    case Errc::not_invertible: return "not-invertible";
    case Errc::non_commuting_square: return "non-commuting-square";
    case Errc::shared_vertical_mismatch: return "shared-vertical-mismatch";
    case Errc::not_pasteable: return "not-pasteable";
    case Errc::size_guard: return "size-guard";
    case Errc::out_of_range: return "out-of-range";
    case Errc::parse: return "parse";
    case Errc::dangling_reference: return "dangling-reference";
    case Errc::inapplicable_suite: return "inapplicable-suite";
    }
    return "unknown";
}

}  // namespace fatcat
