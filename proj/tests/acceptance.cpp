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

// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "fatcat/crossed_module.hpp"
#include "fatcat/document.hpp"
#include "fatcat/double.hpp"
#include "fatcat/error.hpp"
#include "fatcat/group.hpp"
#include "fatcat/lattice.hpp"
#include "fatcat/monoidal.hpp"
#include "fatcat/suites.hpp"

using namespace fatcat;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

int failures = 0;

void criterion(int n, const std::string& title, const std::function<bool(std::ostringstream&)>& body)
{
    std::ostringstream detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
    }
    if (!ok)
        ++failures;
    std::printf("criterion %d %s: %s [%s]\n", n, ok ? "PASS" : "FAIL", title.c_str(), detail.str().c_str());
    std::fflush(stdout);
}

bool witness_has_prefix(const ValidationReport& r, const std::vector<std::string>& prefix)
{
    for (const auto& v : r.violations())
        if ((v.law == "pentagon" || v.law == "associator-naturality") && v.witness.size() >= prefix.size() &&
            std::equal(prefix.begin(), prefix.end(), v.witness.begin()))
            return true;
    return false;
}

const char* const kGridInstances[] = {"z2", "z3", "s3", "gl2f2"};

}  // namespace

int main()
{
    std::vector<ValidationReport> sweeps;
    criterion(1, "interchange on every pasteable grid of z2, z3, s3, gl2f2", [&](std::ostringstream& d) {
        const auto start = Clock::now();
        bool ok = true;
        for (const char* name : kGridInstances) {
            const SpecDocument doc = builtin(name);
            sweeps.push_back(sweep_interchange(*doc.category()));
            const auto& r = sweeps.back();
            d << name << "=" << r.checks("interchange") << " grids/" << r.violation_count() << " bad; ";
            ok = ok && r.ok() && r.checks("interchange") > 0;
        }
        const double secs = seconds_since(start);
        d << "total " << secs << " s";
        return ok && sweeps[2].checks("interchange") >= 1000 && secs < 30.0;
    });

    criterion(2, "horizontal composites keep the defining condition", [&](std::ostringstream& d) {
        bool ok = sweeps.size() == 4;
        for (std::size_t i = 0; i < sweeps.size(); ++i) {
            const auto n = sweeps[i].checks("defining-condition");
            d << kGridInstances[i] << "=" << n << " pairs; ";
            ok = ok && n > 0 && !sweeps[i].has_violation("defining-condition");
        }
        return ok;
    });

    criterion(3, "stacked induced cells equal induced pasted squares", [&](std::ostringstream& d) {
        bool ok = true;
        for (const char* name : kGridInstances) {
            const ValidationReport r = verify_lemma1(*builtin(name).category());
            d << name << "=" << r.checks("lemma1") << " pairs/" << r.violation_count() << " bad; ";
            ok = ok && r.ok() && r.checks("lemma1") > 0;
        }
        return ok;
    });

    criterion(4, "two-sided translations on s3 are closed and factor", [&](std::ostringstream& d) {
        const ValidationReport r =
            verify_enrichment_closure(*builtin("s3").category(), two_sided_translation_predicate());
        for (const char* law :
             {"translation-membership", "member-cells", "vertical-closure", "horizontal-closure", "factorization"})
            d << law << "=" << r.checks(law) << " ";
        d << "violations=" << r.violation_count();
        return r.ok() && r.checks("translation-membership") > 0 && r.checks("vertical-closure") > 0 &&
               r.checks("horizontal-closure") > 0 && r.checks("factorization") == r.checks("horizontal-closure");
    });

    criterion(5, "base coherence passes on direct sums and catches one bad associator", [&](std::ostringstream& d) {
        const ValidationReport good2 = validate_monoidal(std::get<MonoidalStructure>(builtin("dsum2").body));
        const ValidationReport good3 = validate_monoidal(std::get<MonoidalStructure>(builtin("dsum3").body));
        const ValidationReport bad = validate_monoidal(std::get<MonoidalStructure>(builtin("dsum3-bad-assoc").body));
        d << "dsum2 " << good2.checks() << " checks/" << good2.violation_count() << " bad; dsum3 " << good3.checks()
          << "/" << good3.violation_count() << "; corrupted " << bad.violation_count() << " violations";
        if (!bad.violations().empty()) {
            const auto& v = bad.violations().front();
            d << ", first " << v.law << " at";
            for (const auto& w : v.witness)
                d << " " << w;
        }
        return good2.ok() && good3.ok() && !bad.ok() && witness_has_prefix(bad, {"V2", "V0", "V0"});
    });

    criterion(6, "fat triangle and pentagon on the bounded direct sum (d <= 2, p = 2)", [&](std::ostringstream& d) {
        const ValidationReport r = verify_fat_coherence(std::get<MonoidalStructure>(builtin("dsum2").body));
        for (const char* law : {"triangle-slant", "triangle", "pentagon", "associator-bijection"})
            d << law << "=" << r.checks(law) << " ";
        d << "violations=" << r.violation_count();
        return r.ok() && r.checks("triangle") > 0 && r.checks("pentagon") > 0 && r.checks("associator-bijection") > 0;
    });

    criterion(7, "crossed modules: conjugation and trivial actions", [&](std::ostringstream& d) {
        const ValidationReport conj = verify_crossed_module(std::get<CrossedModule>(builtin("conj-s3").body));
        const ValidationReport ts3 = verify_crossed_module(std::get<CrossedModule>(builtin("trivial-s3").body));
        const ValidationReport tz4 = verify_crossed_module(std::get<CrossedModule>(builtin("trivial-z4").body));
        d << "conj-s3 peiffer1=" << conj.checks("peiffer1") << " peiffer2=" << conj.checks("peiffer2")
          << " bad=" << conj.violation_count() << "; trivial-s3 bad=" << ts3.violation_count();
        bool witnessed = false;
        for (const auto& v : ts3.violations())
            if (v.law == "peiffer2" && v.witness.size() == 2) {
                witnessed = true;
                d << " witness (" << v.witness[0] << "," << v.witness[1] << ")";
                break;
            }
        d << "; trivial-z4 bad=" << tz4.violation_count();
        return conj.ok() && conj.checks("peiffer1") == 36 && conj.checks("peiffer2") == 36 && witnessed &&
               tz4.ok();
    });

    criterion(8, "bi-holonomy on a 3x3 Z4 lattice equals the plaquette product", [&](std::ostringstream& d) {
        const auto start = Clock::now();
        const LatticeConnection l = std::get<LatticeConnection>(builtin("lattice-z4").body);
        int matched = 0, total = 0;
        for (std::size_t t = 0; t <= l.T; ++t)
            for (std::size_t s = 0; s <= l.S; ++s) {
                FiniteGroup::Elem prod = l.G.identity();
                for (std::size_t i = 0; i < t; ++i)
                    for (std::size_t j = 0; j < s; ++j)
                        prod = l.G.mul(prod, plaquette_biholonomy(l, i, j));
                ++total;
                matched += biholonomy(l, t, s) == prod;
            }
        bool flat_ok = true;
        const LatticeConnection flat_z4 = std::get<LatticeConnection>(builtin("flat-z4").body);
        for (const auto& col : biholonomy_table(flat_z4))
            for (auto e : col)
                flat_ok = flat_ok && e == flat_z4.G.identity();
        const LatticeConnection flat_s3 = flat_lattice(symmetric_group(3), 3, 3);
        for (const auto& col : biholonomy_table(flat_s3))
            for (auto e : col)
                flat_ok = flat_ok && e == flat_s3.G.identity();
        const double secs = seconds_since(start);
        d << matched << "/" << total << " (t,s) match; flat lattices trivial=" << (flat_ok ? "yes" : "no") << "; "
          << secs * 1000 << " ms";
        return matched == 16 && total == 16 && flat_ok && secs < 1.0;
    });

    criterion(9, "reports are byte-identical across runs and serialization round-trips", [&](std::ostringstream& d) {
        int docs = 0, reports = 0, guarded = 0;
        bool ok = true;
        // A run renders to its JSON report, or to its error when a guard refuses it.
        auto render = [](const SpecDocument& doc, const std::string& name, const std::string& suite) {
            try {
                Report r = run_suite(doc, suite);
                r.input = "builtin:" + name;
                r.elapsed_ms.reset();
                return to_json(r);
            } catch (const Error& e) {
                if (e.code() != Errc::size_guard)
                    throw;
                return std::string("size_guard: ") + e.what();
            }
        };
        for (const auto& name : builtin_names()) {
            const SpecDocument doc = builtin(name);
            const SpecDocument back = parse_spec(serialize(doc));
            ok = ok && back == doc && serialize(back) == serialize(doc);
            ++docs;
            for (const auto& suite : suite_names()) {
                if (name == "gl2f2" && suite == "interchange")
                    continue;  // covered by criterion 1; too slow to repeat three times
                std::string a;
                try {
                    a = render(doc, name, suite);
                } catch (const Error& e) {
                    if (e.code() == Errc::inapplicable_suite)
                        continue;
                    throw;
                }
                ok = ok && a == render(doc, name, suite) && a == render(back, name, suite);
                ++reports;
                guarded += a.starts_with("size_guard") ? 1 : 0;
            }
        }
        // The command-line tool on a written document, twice.
        const std::string path = "acceptance_s3.json";
        {
            std::FILE* f = std::fopen(path.c_str(), "w");
            const std::string text = serialize(builtin("s3"));
            std::fwrite(text.data(), 1, text.size(), f);
            std::fclose(f);
        }
        std::string outputs[2];
        for (auto& out : outputs) {
            const std::string cmd = std::string(FATCAT_CLI_PATH) + " check interchange --format json --input " + path;
            std::FILE* pipe = popen(cmd.c_str(), "r");
            char buf[4096];
            std::size_t n;
            while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0)
                out.append(buf, n);
            ok = ok && pclose(pipe) == 0;
        }
        std::remove(path.c_str());
        ok = ok && !outputs[0].empty() && outputs[0] == outputs[1];
        d << docs << " documents, " << reports << " suite reports compared (" << guarded << " refused by size guards); cli json " << outputs[0].size()
          << " bytes twice " << (outputs[0] == outputs[1] ? "identical" : "different");
        return ok;
    });

    return failures == 0 ? 0 : 1;
}
