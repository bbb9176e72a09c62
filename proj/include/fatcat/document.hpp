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

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fatcat/category.hpp"
#include "fatcat/crossed_module.hpp"
#include "fatcat/lattice.hpp"
#include "fatcat/monoidal.hpp"

namespace fatcat {

/// A loaded input: one of the four document kinds.
struct SpecDocument {
    std::variant<FiniteCategory, MonoidalStructure, CrossedModule, LatticeConnection> body;

    /// "category", "monoidal", "crossed_module" or "lattice".
    std::string kind() const;

    /// The underlying category for category and monoidal documents, else null.
    const FiniteCategory* category() const;

    bool operator==(const SpecDocument&) const = default;
};

/// Parses a JSON document. Syntax errors raise Error(parse) with line and
/// column; unknown names raise Error(dangling_reference) naming the id.
SpecDocument parse_spec(std::string_view text, SizeLimits limits = {});

/// Reads `path`, or resolves "builtin:NAME" without touching the filesystem.
SpecDocument load_spec(const std::string& path, SizeLimits limits = {});

/// Canonical JSON text; parse_spec(serialize(d)) == d.
std::string serialize(const SpecDocument& doc);

/// Names accepted after "builtin:".
std::vector<std::string> builtin_names();

/// Throws Error(parse) for an unknown name.
SpecDocument builtin(const std::string& name, SizeLimits limits = {});

/// Parses "zN" (cyclic) or "sK" (symmetric); used by lattice documents.
FiniteGroup named_group(const std::string& name);

}  // namespace fatcat
