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

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "fatcat/document.hpp"
#include "fatcat/error.hpp"
#include "fatcat/matrix.hpp"
#include "fatcat/suites.hpp"

using namespace fatcat;

namespace {

Errc load_error(const std::string& text, std::string* message = nullptr)
{
    try {
        parse_spec(text);
    } catch (const Error& e) {
        if (message)
            *message = e.what();
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::structural;
}

const char* kTinyCategory = R"({
  "kind": "category",
  "objects": ["*"],
  "morphisms": [{"name": "e", "dom": "*", "cod": "*"}, {"name": "a", "dom": "*", "cod": "*"}],
  "identities": {"*": "e"},
  "compose": [
    {"g": "e", "f": "e", "result": "e"}, {"g": "e", "f": "a", "result": "a"},
    {"g": "a", "f": "e", "result": "a"}, {"g": "a", "f": "a", "result": "e"}
  ]
})";

std::string run_cli(const std::string& args, int* status)
{
    const std::string out = "fatcat_cli_out.txt";
    const std::string cmd = std::string(FATCAT_CLI_PATH) + " " + args + " > " + out + " 2>/dev/null";
    const int raw = std::system(cmd.c_str());
    *status = WEXITSTATUS(raw);
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(out.c_str());
    return ss.str();
}

}  // namespace

TEST_CASE("builtin z2 is a one-object category with two morphisms")
{
    const SpecDocument d = load_spec("builtin:z2");
    REQUIRE(d.category());
    CHECK(d.kind() == "category");
    CHECK(d.category()->object_count() == 1);
    CHECK(d.category()->morphism_count() == 2);
}

TEST_CASE("a hand-written document loads and matches the builtin")
{
    const SpecDocument d = parse_spec(kTinyCategory);
    CHECK(validate_category(*d.category()).ok());
    CHECK(d.category()->label(compose(*d.category(), mor(1), mor(1))) == "e");
}

TEST_CASE("dangling references name the offending id")
{
    std::string text = kTinyCategory;
    text.replace(text.rfind("\"result\": \"e\""), 13, "\"result\": \"zz\"");
    std::string msg;
    CHECK(load_error(text, &msg) == Errc::dangling_reference);
    CHECK(msg.find("zz") != std::string::npos);
    CHECK(msg.find("compose[3].result") != std::string::npos);
}

TEST_CASE("syntax errors report line and column")
{
    std::string msg;
    CHECK(load_error("{\n  \"kind\": \"category\",\n  \"objects\": [1,,]\n}", &msg) == Errc::parse);
    CHECK(msg.find("line 3") != std::string::npos);
    CHECK(msg.find("column") != std::string::npos);
    CHECK(load_error(R"({"kind": "category"})", &msg) == Errc::parse);
    CHECK(msg.find("objects") != std::string::npos);
    CHECK(load_error(R"({"kind": "topos"})") == Errc::parse);
}

TEST_CASE("serialization round-trips every builtin")
{
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        const SpecDocument d = builtin(name);
        const std::string text = serialize(d);
        const SpecDocument back = parse_spec(text);
        CHECK(back == d);
        CHECK(serialize(back) == text);
    }
}

TEST_CASE("the direct-sum instance round-trips and still validates")
{
    const SpecDocument d{direct_sum_monoidal(graded_matrix_groupoid(2, 2))};
    const SpecDocument back = parse_spec(serialize(d));
    CHECK(back == d);
    CHECK(run_suite(back, "coherence-base").pass());
}

TEST_CASE("suite dispatch")
{
    const Report s3 = run_suite(load_spec("builtin:s3"), "interchange");
    CHECK(s3.pass());
    CHECK(s3.result.checks() > 0);

    const Report bad = run_suite(load_spec("builtin:dsum3-bad-assoc"), "coherence-base");
    CHECK_FALSE(bad.pass());
    CHECK(bad.result.has_violation("pentagon"));

    const Report flat = run_suite(load_spec("builtin:flat-z4"), "biholonomy");
    CHECK(flat.pass());
    REQUIRE(flat.table.size() == 4);
    for (const auto& row : flat.table)
        for (const auto& e : row)
            CHECK(e == "0");

    CHECK(run_suite(load_spec("builtin:conj-s3"), "crossed-module").pass());
    CHECK_FALSE(run_suite(load_spec("builtin:trivial-s3"), "crossed-module").pass());
    CHECK(run_suite(load_spec("builtin:lattice-s3"), "biholonomy").pass());
    CHECK(run_suite(load_spec("builtin:z3unitor"), "coherence-fat").pass());
    CHECK(run_suite(load_spec("builtin:gl1f3"), "enrichment").pass());

    try {
        run_suite(load_spec("builtin:s3"), "biholonomy");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::inapplicable_suite);
    }
    CHECK_THROWS_AS(run_suite(load_spec("builtin:s3"), "coherence-base"), Error);
    CHECK_THROWS_AS(run_suite(load_spec("builtin:lattice-z4"), "axioms"), Error);
}

TEST_CASE("law sweeps stop at broken axioms")
{
    // e . a = e breaks the left identity law.
    std::string text = kTinyCategory;
    const std::string entry = R"({"g": "e", "f": "a", "result": "a"})";
    text.replace(text.find(entry), entry.size(), R"({"g": "e", "f": "a", "result": "e"})");
    const SpecDocument d = parse_spec(text);
    for (const char* suite : {"axioms", "lemma1", "interchange", "enrichment"}) {
        const Report r = run_suite(d, suite);
        CHECK_FALSE(r.pass());
        CHECK(r.result.checks("interchange") == 0);
    }
}

TEST_CASE("json reports are deterministic and omit timing by default")
{
    for (const char* name : {"s3", "dsum3-bad-assoc", "lattice-z4", "trivial-s3"}) {
        const SpecDocument d = load_spec(std::string("builtin:") + name);
        const std::string suite = d.kind() == "category"         ? "lemma1"
                                  : d.kind() == "monoidal"       ? "coherence-fat"
                                  : d.kind() == "crossed_module" ? "crossed-module"
                                                                 : "biholonomy";
        Report a = run_suite(d, suite);
        Report b = run_suite(parse_spec(serialize(d)), suite);
        a.elapsed_ms.reset();
        b.elapsed_ms.reset();
        CHECK(to_json(a) == to_json(b));
        CHECK(to_json(a).find("elapsed_ms") == std::string::npos);
        a.elapsed_ms = 1.5;
        CHECK(to_json(a).find("elapsed_ms") != std::string::npos);
    }
}

TEST_CASE("command-line exit codes and byte-identical output")
{
    int status = -1;
    const std::string first = run_cli("check interchange --input builtin:s3 --format json", &status);
    CHECK(status == 0);
    const std::string second = run_cli("check interchange --input builtin:s3 --format json", &status);
    CHECK(first == second);
    CHECK(first.find("\"pass\": true") != std::string::npos);

    run_cli("check coherence-base --input builtin:dsum3-bad-assoc", &status);
    CHECK(status == 1);
    run_cli("check axioms --input builtin:nope", &status);
    CHECK(status == 2);
    run_cli("check axioms --input /nonexistent/file.json", &status);
    CHECK(status == 2);
    run_cli("check teleport --input builtin:s3", &status);
    CHECK(status == 2);
    run_cli("check biholonomy --input builtin:s3", &status);
    CHECK(status == 2);
    run_cli("check axioms --input builtin:s3 --max-size 3", &status);
    CHECK(status == 2);

    const std::string table = run_cli("check biholonomy --input builtin:flat-z4", &status);
    CHECK(status == 0);
    CHECK(table.find("PASS") != std::string::npos);

    const std::string exported = run_cli("export --input builtin:z3", &status);
    CHECK(status == 0);
    CHECK(parse_spec(exported) == load_spec("builtin:z3"));
}
