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

#include "fatcat/report.hpp"

#include <algorithm>

namespace fatcat {

void ValidationReport::add(Violation v)
{
    ++violation_count_;
    if (violations_.size() < kMaxRecorded)
        violations_.push_back(std::move(v));
}

void ValidationReport::merge(const ValidationReport& other)
{
    for (const auto& [law, n] : other.counts_)
        counts_[law] += n;
    for (const auto& v : other.violations_) {
        if (violations_.size() >= kMaxRecorded)
            break;
        violations_.push_back(v);
    }
    violation_count_ += other.violation_count_;
}

std::uint64_t ValidationReport::checks() const noexcept
{
    std::uint64_t total = 0;
    for (const auto& [law, n] : counts_)
        total += n;
    return total;
}

std::uint64_t ValidationReport::checks(const std::string& law) const
{
    auto it = counts_.find(law);
    return it == counts_.end() ? 0 : it->second;
}

bool ValidationReport::has_violation(const std::string& law) const
{
    return std::any_of(violations_.begin(), violations_.end(),
                       [&](const Violation& v) { return v.law == law; });
}

}  // namespace fatcat
