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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fatcat/category.hpp"

namespace fatcat {

/// Finite group given by its multiplication table. Elements are dense indices.
class FiniteGroup {
public:
    using Elem = std::uint32_t;

    /// Checks closure, associativity, identity and inverses; throws
    /// Error(structural) naming the first failure. Names default to "0", "1", ...
    static FiniteGroup from_table(std::vector<std::vector<Elem>> table, std::vector<std::string> names = {});

    std::size_t order() const noexcept { return table_.size(); }
    Elem identity() const noexcept { return identity_; }
    Elem mul(Elem a, Elem b) const { return table_[a][b]; }
    Elem inv(Elem a) const { return inverse_[a]; }
    const std::string& name(Elem a) const { return names_.at(a); }
    std::optional<Elem> find(std::string_view name) const;
    bool is_abelian() const;

    const std::vector<std::vector<Elem>>& table() const noexcept { return table_; }
    const std::vector<std::string>& names() const noexcept { return names_; }

    bool operator==(const FiniteGroup&) const = default;

private:
    std::vector<std::vector<Elem>> table_;
    std::vector<std::string> names_;
    std::vector<Elem> inverse_;
    Elem identity_ = 0;
};

/// Z_n with elements named "0".."n-1".
FiniteGroup cyclic_group(std::size_t n);

/// S_k, k <= 5, in lexicographic order of images. mul(a, b) applies b first.
/// Elements are named in cycle notation on 1..k, with "e" for the identity.
FiniteGroup symmetric_group(std::size_t k);

/// One object, one morphism per element, composite(g, f) = g * f.
FiniteCategory group_as_groupoid(const FiniteGroup& g, std::string object = "*");

}  // namespace fatcat
