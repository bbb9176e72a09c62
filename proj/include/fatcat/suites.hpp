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

#include <optional>
#include <string>
#include <vector>

#include "fatcat/document.hpp"
#include "fatcat/report.hpp"

namespace fatcat {

struct SuiteOptions {
    std::string predicate = "two-sided-translation";
    Exec exec = Exec::parallel;
};

/// Outcome of one suite on one document.
struct Report {
    std::string suite;
    std::string input;
    ValidationReport result;
    /// Rows of g(t, s) element names, biholonomy suite only.
    std::vector<std::vector<std::string>> table;
    std::optional<double> elapsed_ms;

    bool pass() const noexcept { return result.ok(); }
};

/// "axioms", "lemma1", "interchange", "enrichment", "coherence-base",
/// "coherence-fat", "crossed-module", "biholonomy".
const std::vector<std::string>& suite_names();

/// Dispatches to the verifiers. Sweeps that assume a lawful category run
/// only after validate_category passes; otherwise the axiom violations are
/// the report. Throws Error(inapplicable_suite) for a mismatched kind.
Report run_suite(const SpecDocument& doc, const std::string& suite, const SuiteOptions& opts = {});

/// Deterministic JSON; "elapsed_ms" appears only when set.
std::string to_json(const Report& r);

std::string to_table(const Report& r);

}  // namespace fatcat
