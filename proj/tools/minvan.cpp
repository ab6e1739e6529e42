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

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "minvan/cli.hpp"
#include "minvan/numtheory.hpp"
#include "minvan/sorou.hpp"

namespace {

std::string default_db() {
    const char* env = std::getenv("MINVAN_DB");
    return env ? env : "minvan.db";
}

}  // namespace

int main(int argc, char** argv) {
    using namespace minvan::cli;
    CLI::App app{"Classification of minimal vanishing sums of roots of unity"};
    app.require_subcommand(1);
    std::string db = default_db();
    app.add_option("--db", db, "Type database path (default: $MINVAN_DB or minvan.db)");

    int threads = 1;
    bool no_collapse = false;
    auto* bootstrap = app.add_subcommand("bootstrap", "Generate weights 2..12 and check them against the reference list");
    bootstrap->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    bootstrap->add_flag("--no-conjugate-collapse", no_collapse, "Keep Galois conjugate types apart");

    int to = 0;
    bool no_filter = false;
    auto* extend = app.add_subcommand("extend", "Extend the database weight by weight");
    extend->add_option("--to", to, "Target weight")->required();
    extend->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    extend->add_flag("--no-minvan-filter", no_filter, "Do not require a minimal subsidiary type");
    extend->add_flag("--no-conjugate-collapse", no_collapse, "Keep Galois conjugate types apart");

    std::string text;
    auto* verify = app.add_subcommand("verify", "Check a sorou and print its invariants");
    verify->add_option("sorou", text, "Sorou text, e.g. 1:0+2:1")->required();

    bool use_cache = false;
    auto* enumerate = app.add_subcommand("enumerate", "List every sorou of a type up to rotation");
    enumerate->add_option("type", text, "Type text, e.g. (R5;1:0;(R3;1:0))")->required();
    enumerate->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    enumerate->add_flag("--cache", use_cache, "Read and update the cache next to the database");

    std::string format = "csv";
    std::string out;
    auto* report = app.add_subcommand("report", "Write the database as CSV or LaTeX");
    report->add_option("--format", format, "csv or latex");
    report->add_option("--out", out, "Output file (default: standard output)");

    std::int64_t n = 0;
    auto* phi = app.add_subcommand("phi", "Print the coefficients of the n-th cyclotomic polynomial");
    phi->add_option("n", n, "Index")->required();

    double radius = 100.0, step = 30.0;
    auto* plot = app.add_subcommand("plot", "Draw a sorou as SVG");
    plot->add_option("sorou", text, "Sorou text")->required();
    plot->add_option("--out", out, "SVG output path")->required();
    plot->add_option("--radius", radius, "Unit circle radius");
    plot->add_option("--step", step, "Extra radius per repeated term");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Streams io{std::cout, std::cerr};
    try {
        if (*bootstrap) return cmd_bootstrap({db, threads, !no_collapse, std::nullopt}, io);
        if (*extend) return cmd_extend({db, to, threads, !no_filter, !no_collapse}, io);
        if (*verify) return cmd_verify(text, io);
        if (*enumerate)
            return cmd_enumerate(text, use_cache ? std::optional<std::filesystem::path>(db) : std::nullopt, threads, io);
        if (*report)
            return cmd_report(db, format, out.empty() ? std::nullopt : std::optional<std::filesystem::path>(out), io);
        if (*phi) return cmd_phi(n, io);
        if (*plot) return cmd_plot(text, out, radius, step, io);
    } catch (const minvan::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
