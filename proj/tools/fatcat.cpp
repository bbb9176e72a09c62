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

// fatcat: load a category, monoidal, crossed-module or lattice document and
// run a verification suite against it.
//
// Exit status: 0 when the suite passes, 1 when it finds violations, 2 on any
// input problem (unreadable or malformed document, unknown suite, guard).

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fatcat/document.hpp"
#include "fatcat/error.hpp"
#include "fatcat/suites.hpp"

int main(int argc, char** argv)
{
    using namespace fatcat;

    CLI::App app{"Exhaustive law checks for finite categories and their fat double categories"};
    app.require_subcommand(1);

    std::string suite, input, format = "table", predicate = "two-sided-translation";
    std::size_t max_size = SizeLimits{}.max_hom_set;
    bool timing = false, serial = false;

    auto* check = app.add_subcommand("check", "Run one verification suite");
    check->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    check->add_option("--input", input, "Document path or builtin:NAME")->required();
    check->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
    check->add_option("--max-size", max_size, "Largest hom-set accepted")->check(CLI::PositiveNumber);
    check->add_option("--predicate", predicate, "Cell predicate for the enrichment suite");
    check->add_flag("--timing", timing, "Report elapsed time");
    check->add_flag("--serial", serial, "Run sweeps on one thread");

    std::string export_input;
    auto* dump = app.add_subcommand("export", "Print a document in canonical JSON form");
    dump->add_option("--input", export_input, "Document path or builtin:NAME")->required();
    dump->add_option("--max-size", max_size, "Largest hom-set accepted")->check(CLI::PositiveNumber);

    auto* list = app.add_subcommand("list", "List builtin documents");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    SizeLimits limits;
    limits.max_hom_set = max_size;

    try {
        if (*list) {
            for (const auto& name : builtin_names())
                std::cout << name << "\n";
            return 0;
        }
        if (*dump) {
            std::cout << serialize(load_spec(export_input, limits));
            return 0;
        }
        const SpecDocument doc = load_spec(input, limits);
        SuiteOptions opts;
        opts.predicate = predicate;
        opts.exec = serial ? Exec::serial : Exec::parallel;
        Report report = run_suite(doc, suite, opts);
        report.input = input;
        if (!timing)
            report.elapsed_ms.reset();
        std::cout << (format == "json" ? to_json(report) : to_table(report));
        return report.pass() ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "fatcat: " << to_string(e.code()) << ": " << e.what() << "\n";
        return 2;
    }
}
