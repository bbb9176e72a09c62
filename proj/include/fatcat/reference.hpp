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

#include <span>

#include "fatcat/double.hpp"

// Straightforward serial versions of the exhaustive sweeps, written against
// the public cell API only. They enumerate in the same order as the packed
// kernels and exist to cross-check them.
namespace fatcat::reference {

ValidationReport verify_lemma1(const FiniteCategory& c);

ValidationReport sweep_interchange(const FiniteCategory& c, std::span<const Square> extra = {});

}  // namespace fatcat::reference
