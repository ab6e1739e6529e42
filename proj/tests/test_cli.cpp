/*
   Copyright 2026 The minvan Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "fixtures.hpp"
#include "minvan/cli.hpp"
#include "minvan/store.hpp"

using namespace minvan;
using namespace minvan::cli;

namespace {

struct Capture {
    std::ostringstream out, err;
    Streams io() { return {out, err}; }
};

std::filesystem::path fresh_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "minvan_cli_test" / name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

int count_types(const std::filesystem::path& db) { return static_cast<int>(load_db(db).records.size()); }

}  // namespace

TEST_CASE("bootstrap builds and checks weights through 12") {
    const auto db = fresh_dir("bootstrap") / "types.db";
    Capture c;
    REQUIRE(cmd_bootstrap({db, 1, true, std::nullopt}, c.io()) == kExitOk);
    CHECK(count_types(db) == 21);
    CHECK(load_db(db).max_complete_weight == 12);
    CHECK(bootstrap_fixture().size() == 21);
    CHECK(std::filesystem::exists(cache_path(db)));

    const std::string before = read_file(db);
    Capture again;
    CHECK(cmd_bootstrap({db, 1, true, std::nullopt}, again.io()) == kExitOk);
    CHECK(again.out.str().find("already bootstrapped") != std::string::npos);
    CHECK(read_file(db) == before);

    auto tampered = bootstrap_fixture();
    tampered.pop_back();
    Capture bad;
    CHECK(cmd_bootstrap({fresh_dir("tampered") / "types.db", 1, true, tampered}, bad.io()) == kExitFailure);
    CHECK(bad.err.str().find("differ") != std::string::npos);
}

TEST_CASE("extend adds weights and reports counts") {
    const auto db = fresh_dir("extend") / "types.db";
    Capture c;
    REQUIRE(cmd_bootstrap({db, 1, true, std::nullopt}, c.io()) == kExitOk);
    Capture e13;
    REQUIRE(cmd_extend({db, 13, 1, true, true}, e13.io()) == kExitOk);
    CHECK(count_types(db) == 29);
    CHECK(e13.out.str() == "weight 13: 8 types, 29 cumulative, max height 1\n");
    Capture e16;
    REQUIRE(cmd_extend({db, 16, 2, true, true}, e16.io()) == kExitOk);
    CHECK(count_types(db) == 76);
    CHECK(e16.out.str().find("weight 16: 23 types, 76 cumulative") != std::string::npos);
    Capture noop;
    CHECK(cmd_extend({db, 15, 1, true, true}, noop.io()) == kExitOk);
    Capture mismatch;
    CHECK(cmd_extend({db, 17, 1, true, false}, mismatch.io()) == kExitUsage);
    Capture missing;
    CHECK(cmd_extend({fresh_dir("none") / "types.db", 13, 1, true, true}, missing.io()) == kExitUsage);

    Capture csv;
    REQUIRE(cmd_report(db, "csv", std::nullopt, csv.io()) == kExitOk);
    CHECK(csv.out.str().find("6, 5, 30, (2;1;1;1;1), (R_5:R_3), 1, (4;2), False\n") != std::string::npos);
    const auto tex = db.parent_path() / "table.tex";
    CHECK(cmd_report(db, "latex", tex, csv.io()) == kExitOk);
    CHECK(read_file(tex).find("longtable") != std::string::npos);
    Capture bad;
    CHECK(cmd_report(db, "xml", std::nullopt, bad.io()) == kExitUsage);
}

TEST_CASE("thread count does not change the database") {
    const auto a = fresh_dir("threads_a") / "types.db";
    const auto b = fresh_dir("threads_b") / "types.db";
    Capture c;
    cmd_bootstrap({a, 1, true, std::nullopt}, c.io());
    cmd_bootstrap({b, 3, true, std::nullopt}, c.io());
    Capture ea, eb;
    cmd_extend({a, 15, 1, true, true}, ea.io());
    cmd_extend({b, 15, 3, true, true}, eb.io());
    CHECK(read_file(a) == read_file(b));
    CHECK(ea.out.str() == eb.out.str());
}

TEST_CASE("verify reports invariants") {
    Capture r2;
    CHECK(cmd_verify("1:0+2:1", r2.io()) == kExitOk);
    CHECK(r2.out.str().find("minimal: yes\n") != std::string::npos);
    CHECK(r2.out.str().find("type: R_2\n") != std::string::npos);

    Capture h;
    CHECK(cmd_verify(render_sorou(fixtures::weight21_h()), h.io()) == kExitOk);
    const std::string text = h.out.str();
    CHECK(text.find("weight: 21\n") != std::string::npos);
    CHECK(text.find("height: 2\n") != std::string::npos);
    CHECK(text.find("minimal: yes\n") != std::string::npos);
    CHECK(text.find("type: (R_7:1+\\nu_{15}^2:(R_5:2R_3),(R_3\\oplus R_5))\n") != std::string::npos);

    Capture nv;
    CHECK(cmd_verify("1:0+3:1", nv.io()) == kExitFailure);
    CHECK(nv.out.str().find("vanishing: no\n") != std::string::npos);
    Capture nm;
    CHECK(cmd_verify(render_sorou(fixtures::R(3) + fixtures::R(5)), nm.io()) == kExitFailure);
    CHECK(nm.out.str().find("minimal: no") != std::string::npos);
    Capture bad;
    CHECK_THROWS_AS(cmd_verify("1:0+", bad.io()), ParseError);
}

TEST_CASE("enumerate prints classes and parities") {
    Capture c;
    CHECK(cmd_enumerate("(R5;1:0;(R3;1:0))", std::nullopt, 1, c.io()) == kExitOk);
    CHECK(c.out.str().find("parities: (4,2)\n") != std::string::npos);
    CHECK(c.out.str().find("classes: 1, minimal: 1\n") != std::string::npos);
    Capture sum;
    CHECK(cmd_enumerate("(R3;1:0)&(R2;1:0)", std::nullopt, 1, sum.io()) == kExitUsage);
}

TEST_CASE("phi flags large coefficients") {
    Capture c105;
    CHECK(cmd_phi(105, c105.io()) == kExitOk);
    CHECK(c105.out.str().find("coefficients outside {-1,0,1}: x^7:-2 x^41:-2\n") != std::string::npos);
    Capture c6;
    CHECK(cmd_phi(6, c6.io()) == kExitOk);
    CHECK(c6.out.str() == "Phi_6 degree 2\ncoefficients (lowest degree first): 1 -1 1\nall coefficients in {-1,0,1}\n");
    Capture bad;
    CHECK(cmd_phi(0, bad.io()) == kExitUsage);
}

TEST_CASE("plot writes an svg with one marker per distinct term") {
    const auto out = fresh_dir("plot") / "h.svg";
    Capture c;
    const Sorou h = fixtures::weight21_h();
    CHECK(cmd_plot(render_sorou(h), out, 100, 30, c.io()) == kExitOk);
    const std::string svg = read_file(out);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>\n") == svg.size() - 7);
    std::size_t markers = 0;
    for (std::size_t at = svg.find("r=\"3\""); at != std::string::npos; at = svg.find("r=\"3\"", at + 1)) ++markers;
    CHECK(markers == h.distinct());
    // The doubled term sits on a larger circle.
    const std::string stacked = render_svg({Sorou{kOne, kOne}, out, 100, 30});
    CHECK(stacked.find("x2=\"130.000\"") != std::string::npos);
    CHECK(cmd_plot("1:0", out, -1, 30, c.io()) == kExitUsage);
}
