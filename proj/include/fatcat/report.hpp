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
#include <map>
#include <string>
#include <vector>

namespace fatcat {

struct Violation {
    std::string law;
    std::vector<std::string> witness;
    std::string details;

    bool operator==(const Violation&) const = default;
};

/// Outcome of an exhaustive law check.
///
/// `counts` records how many instances of each law were evaluated. Only the
/// first `kMaxRecorded` violations are kept verbatim; `violation_count` is exact.
class ValidationReport {
public:
    static constexpr std::size_t kMaxRecorded = 64;

    void count(const std::string& law, std::uint64_t n = 1) { counts_[law] += n; }
    void add(Violation v);
    void merge(const ValidationReport& other);

    bool ok() const noexcept { return violation_count_ == 0; }
    std::uint64_t checks() const noexcept;
    std::uint64_t checks(const std::string& law) const;
    std::uint64_t violation_count() const noexcept { return violation_count_; }

    const std::map<std::string, std::uint64_t>& counts() const noexcept { return counts_; }
    const std::vector<Violation>& violations() const noexcept { return violations_; }

    bool has_violation(const std::string& law) const;

private:
    std::map<std::string, std::uint64_t> counts_;
    std::vector<Violation> violations_;
    std::uint64_t violation_count_ = 0;
};

}  // namespace fatcat
