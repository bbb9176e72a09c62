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

#include "fatcat/suites.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "fatcat/double.hpp"
#include "fatcat/error.hpp"

namespace fatcat {

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"axioms",        "lemma1",         "interchange",
                                                   "enrichment",    "coherence-base", "coherence-fat",
                                                   "crossed-module", "biholonomy"};
    return names;
}

namespace {

[[noreturn]] void inapplicable(const std::string& suite, const SpecDocument& doc)
{
    fail(Errc::inapplicable_suite, "suite '" + suite + "' does not apply to a " + doc.kind() + " document");
}

ValidationReport biholonomy_suite(const LatticeConnection& l, std::vector<std::vector<std::string>>& table)
{
    using Elem = FiniteGroup::Elem;
    const FiniteGroup& G = l.G;
    const auto g = biholonomy_table(l);
    ValidationReport r;
    auto at = [](std::size_t t, std::size_t s) { return "(" + std::to_string(t) + "," + std::to_string(s) + ")"; };

    for (std::size_t t = 0; t <= l.T; ++t) {
        table.emplace_back();
        for (std::size_t s = 0; s <= l.S; ++s) {
            table.back().push_back(G.name(g[t][s]));
            if (t == 0 || s == 0) {
                r.count("degenerate-rectangle");
                if (g[t][s] != G.identity())
                    r.add({"degenerate-rectangle", {at(t, s)}, "g = " + G.name(g[t][s]) + " on a degenerate rectangle"});
            }
        }
    }

    // Splitting [0, t] at t1: g(t,s) = g(t1,s) P^-1 g'(t-t1,s) P with P the
    // bottom transport to t1 and g' taken on the columns from t1 on.
    for (std::size_t t1 = 1; t1 < l.T; ++t1) {
        const LatticeConnection right = columns(l, t1, l.T);
        const Elem p = row_transport(l, 0, t1);
        for (std::size_t t = t1 + 1; t <= l.T; ++t)
            for (std::size_t s = 0; s <= l.S; ++s) {
                r.count("column-pasting");
                const Elem pasted = G.mul(G.mul(g[t1][s], G.inv(p)), G.mul(biholonomy(right, t - t1, s), p));
                if (pasted != g[t][s])
                    r.add({"column-pasting", {at(t, s), std::to_string(t1)},
                           "pasted value " + G.name(pasted) + " != " + G.name(g[t][s])});
            }
    }

    if (G.is_abelian()) {
        for (std::size_t t = 0; t <= l.T; ++t)
            for (std::size_t s = 0; s <= l.S; ++s) {
                Elem prod = G.identity();
                for (std::size_t i = 0; i < t; ++i)
                    for (std::size_t j = 0; j < s; ++j)
                        prod = G.mul(prod, plaquette_biholonomy(l, i, j));
                r.count("plaquette-product");
                if (prod != g[t][s])
                    r.add({"plaquette-product", {at(t, s)},
                           "plaquette product " + G.name(prod) + " != " + G.name(g[t][s])});
            }
    }
    return r;
}

ValidationReport dispatch(const SpecDocument& doc, const std::string& suite, const SuiteOptions& opts,
                          std::vector<std::vector<std::string>>& table)
{
    if (suite == "crossed-module") {
        auto* cm = std::get_if<CrossedModule>(&doc.body);
        if (!cm)
            inapplicable(suite, doc);
        return verify_crossed_module(*cm);
    }
    if (suite == "biholonomy") {
        auto* l = std::get_if<LatticeConnection>(&doc.body);
        if (!l)
            inapplicable(suite, doc);
        return biholonomy_suite(*l, table);
    }

    const bool known = std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end();
    if (!known)
        fail(Errc::inapplicable_suite, "unknown suite '" + suite + "'");
    const FiniteCategory* c = doc.category();
    if (!c)
        inapplicable(suite, doc);
    const auto* m = std::get_if<MonoidalStructure>(&doc.body);
    if ((suite == "coherence-base" || suite == "coherence-fat") && !m)
        inapplicable(suite, doc);

    // Every other sweep assumes lawful composition.
    ValidationReport axioms = validate_category(*c, opts.exec);
    if (suite == "axioms" || !axioms.ok())
        return axioms;

    if (suite == "lemma1")
        return verify_lemma1(*c, opts.exec);
    if (suite == "interchange")
        return sweep_interchange(*c, {}, opts.exec);
    if (suite == "enrichment") {
        auto p = predicate_by_name(opts.predicate);
        if (!p)
            fail(Errc::parse, "unknown predicate '" + opts.predicate + "'");
        return verify_enrichment_closure(*c, *p);
    }
    if (suite == "coherence-base")
        return validate_monoidal(*m);
    return verify_fat_coherence(*m, opts.exec);
}

}  // namespace

Report run_suite(const SpecDocument& doc, const std::string& suite, const SuiteOptions& opts)
{
    Report r;
    r.suite = suite;
    const auto start = std::chrono::steady_clock::now();
    r.result = dispatch(doc, suite, opts, r.table);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string to_json(const Report& r)
{
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["input"] = r.input;
    j["pass"] = r.pass();
    j["checks"] = r.result.checks();
    j["counts"] = r.result.counts();
    j["violation_count"] = r.result.violation_count();
    j["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : r.result.violations())
        j["violations"].push_back({{"law", v.law}, {"witness", v.witness}, {"details", v.details}});
    if (!r.table.empty())
        j["table"] = r.table;
    if (r.elapsed_ms)
        j["elapsed_ms"] = *r.elapsed_ms;
    return j.dump(2) + "\n";
}

std::string to_table(const Report& r)
{
    std::ostringstream out;
    out << "suite       " << r.suite << "\n";
    out << "input       " << r.input << "\n";
    out << "result      " << (r.pass() ? "PASS" : "FAIL") << "\n";
    out << "checks      " << r.result.checks() << "\n";
    for (const auto& [law, n] : r.result.counts())
        out << "  " << std::left << std::setw(26) << law << n << "\n";
    out << "violations  " << r.result.violation_count() << "\n";
    for (const auto& v : r.result.violations()) {
        out << "  " << v.law << " (";
        for (std::size_t i = 0; i < v.witness.size(); ++i)
            out << (i ? ", " : "") << v.witness[i];
        out << "): " << v.details << "\n";
    }
    if (r.result.violation_count() > r.result.violations().size())
        out << "  ... " << r.result.violation_count() - r.result.violations().size() << " more\n";
    if (!r.table.empty()) {
        out << "g(t,s)      rows t, columns s\n";
        for (std::size_t t = 0; t < r.table.size(); ++t) {
            out << "  t=" << std::left << std::setw(4) << t;
            for (const auto& e : r.table[t])
                out << std::setw(8) << e;
            out << "\n";
        }
    }
    if (r.elapsed_ms)
        out << "elapsed     " << std::fixed << std::setprecision(1) << *r.elapsed_ms << " ms\n";
    return out.str();
}

}  // namespace fatcat
