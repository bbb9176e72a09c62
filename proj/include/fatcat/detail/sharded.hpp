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

#include <algorithm>
#include <cstddef>
#include <vector>

#include "fatcat/ids.hpp"
#include "fatcat/report.hpp"

namespace fatcat::detail {

// Splits [0, n) into a thread-count-independent set of chunks, runs `body(i,
// report)` for every index and merges the partial reports in chunk order, so
// the result is identical for serial and parallel execution. `body` must not
// throw.
template <class Body>
ValidationReport sharded_sweep(std::size_t n, Exec exec, Body&& body)
{
    const std::size_t chunk = std::max<std::size_t>(1, n / 256);
    const std::size_t chunks = (n + chunk - 1) / chunk;
    std::vector<ValidationReport> parts(chunks);

    auto run_chunk = [&](std::size_t c) {
        const std::size_t end = std::min(n, (c + 1) * chunk);
        for (std::size_t i = c * chunk; i < end; ++i)
            body(i, parts[c]);
    };

    if (exec == Exec::parallel) {
        const long long count = static_cast<long long>(chunks);
#pragma omp parallel for schedule(dynamic, 1)
        for (long long c = 0; c < count; ++c)
            run_chunk(static_cast<std::size_t>(c));
    } else {
        for (std::size_t c = 0; c < chunks; ++c)
            run_chunk(c);
    }

    ValidationReport out;
    for (const auto& p : parts)
        out.merge(p);
    return out;
}

}  // namespace fatcat::detail
