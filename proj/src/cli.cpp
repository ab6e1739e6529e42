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

#include "minvan/cli.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>

#include "minvan/cyclotomic.hpp"
#include "minvan/enumerate.hpp"
#include "minvan/minimality.hpp"
#include "minvan/parallel.hpp"
#include "minvan/store.hpp"
#include "minvan/typegen.hpp"

namespace minvan::cli {

const std::vector<std::string>& bootstrap_fixture() {
    static const std::vector<std::string> fixture = {
        "(R2;1:0)",
        "(R3;1:0)",
        "(R5;1:0)",
        "(R5;1:0;(R3;1:0))",
        "(R5;1:0;(R3;1:0);(R3;1:0))",
        "(R7;1:0)",
        "(R5;1:0;(R3;1:0);(R3;1:0);(R3;1:0))",
        "(R7;1:0;(R3;1:0))",
        "(R5;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0))",
        "(R7;1:0;(R3;1:0);(R3;1:0))",
        "(R7;1:0;(R5;1:0))",
        "(R7;1:0;(R3;1:0);(R3;1:0);(R3;1:0))",
        "(R7;1:0;(R5;1:0;(R3;1:0)))",
        "(R7;1:0;(R5;1:0);(R3;1:0))",
        "(R7;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0))",
        "(R11;1:0)",
        "(R7;1:0;(R5;1:0;(R3;1:0);(R3;1:0)))",
        "(R7;1:0;(R5;1:0;(R3;1:0));(R3;1:0))",
        "(R7;1:0;(R5;1:0);(R3;1:0);(R3;1:0))",
        "(R7;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0))",
        "(R11;1:0;(R3;1:0))",
    };
    return fixture;
}

std::filesystem::path cache_path(const std::filesystem::path& db) {
    std::filesystem::path p = db;
    p += ".cache";
    return p;
}

namespace {

constexpr int kBootstrapWeight = 12;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// Generates and commits weights up to `to`, saving after each weight when a
/// path is given.
void grow(TypeDatabase& db, int to, const GenerationConfig& base, EnumerationCache& cache,
          const std::optional<std::filesystem::path>& path, Streams io) {
    for (int w = db.max_complete_weight + 1; w <= to; ++w) {
        const auto t0 = std::chrono::steady_clock::now();
        GenerationConfig cfg = base;
        cfg.target_weight = w;
        const auto types = generate_next_weight(db, cfg, cache);
        std::vector<TypeRecord> records(types.size());
        parallel_for(types.size(), cfg.threads, [&](std::size_t i) { records[i] = type_statistics(types[i], cache); });
        int max_height = 0;
        for (auto& r : records) {
            max_height = std::max(max_height, *r.heights.rbegin());
            db.records.push_back(std::move(r));
        }
        db.max_complete_weight = w;
        if (path) {
            save_db(db, *path);
            save_cache(cache.snapshot(), cache_path(*path));
        }
        io.out << "weight " << w << ": " << types.size() << " types, " << db.records.size() << " cumulative, max height "
               << max_height << "\n";
        io.err << "weight " << w << " took " << std::fixed << std::setprecision(3) << seconds_since(t0) << " s\n";
        io.err.unsetf(std::ios::floatfield);
    }
}

EnumerationCache open_cache(const std::filesystem::path& db, Streams io) {
    try {
        return EnumerationCache(load_cache(cache_path(db)));
    } catch (const Error& e) {
        io.err << "warning: ignoring unreadable cache: " << e.what() << "\n";
        return EnumerationCache();
    }
}

std::string format_parities(const std::set<Parity>& ps) {
    std::string out;
    for (const auto& p : ps) {
        if (!out.empty()) out += ", ";
        out += "(" + std::to_string(p.larger) + "," + std::to_string(p.smaller) + ")";
    }
    return out;
}

}  // namespace

int cmd_bootstrap(const BootstrapOptions& opts, Streams io) {
    GenerationConfig cfg;
    cfg.threads = opts.threads;
    cfg.enable_conjugate_collapse = opts.conjugate_collapse;
    TypeDatabase fresh;
    fresh.collapse = opts.conjugate_collapse;
    EnumerationCache cache = open_cache(opts.db, io);
    grow(fresh, kBootstrapWeight, cfg, cache, std::nullopt, io);

    if (opts.conjugate_collapse) {
        const auto& fixture = opts.fixture ? *opts.fixture : bootstrap_fixture();
        std::vector<std::string> got;
        for (const auto& r : fresh.records) got.push_back(render_type(r.type));
        if (got != fixture) {
            io.err << "error: generated weight <= " << kBootstrapWeight << " types differ from the reference list ("
                   << got.size() << " generated, " << fixture.size() << " expected)\n";
            return kExitFailure;
        }
    }

    if (std::filesystem::exists(opts.db)) {
        const TypeDatabase existing = load_db(opts.db);
        std::vector<TypeRecord> prefix;
        for (const auto& r : existing.records)
            if (r.weight <= kBootstrapWeight) prefix.push_back(r);
        if (existing.collapse == fresh.collapse && existing.max_complete_weight >= kBootstrapWeight &&
            prefix == fresh.records) {
            io.out << "database already bootstrapped: " << existing.records.size() << " records through weight "
                   << existing.max_complete_weight << "\n";
            return kExitOk;
        }
    }
    save_db(fresh, opts.db);
    save_cache(cache.snapshot(), cache_path(opts.db));
    io.out << "bootstrapped " << fresh.records.size() << " records through weight " << kBootstrapWeight << "\n";
    return kExitOk;
}

int cmd_extend(const ExtendOptions& opts, Streams io) {
    if (!std::filesystem::exists(opts.db)) {
        io.err << "error: no database at " << opts.db.string() << "; run bootstrap first\n";
        return kExitUsage;
    }
    TypeDatabase db = load_db(opts.db);
    if (db.collapse != opts.conjugate_collapse) {
        io.err << "error: database collapse=" << (db.collapse ? "on" : "off") << " does not match the requested mode\n";
        return kExitUsage;
    }
    if (opts.to <= db.max_complete_weight) {
        io.out << "database already complete through weight " << db.max_complete_weight << "\n";
        return kExitOk;
    }
    GenerationConfig cfg;
    cfg.threads = opts.threads;
    cfg.enable_minvan_subtype_filter = opts.minvan_filter;
    cfg.enable_conjugate_collapse = opts.conjugate_collapse;
    EnumerationCache cache = open_cache(opts.db, io);
    grow(db, opts.to, cfg, cache, opts.db, io);
    return kExitOk;
}

int cmd_verify(const std::string& sorou_text, Streams io) {
    const Sorou s = parse_sorou(sorou_text);
    const bool vanishing = is_vanishing(s);
    io.out << "sorou: " << render_sorou(s) << "\n";
    io.out << "weight: " << s.weight() << "\n";
    io.out << "height: " << s.height() << "\n";
    io.out << "order: " << order(s) << "\n";
    io.out << "relative order: " << relative_order(s) << "\n";
    io.out << "vanishing: " << (vanishing ? "yes" : "no") << "\n";
    if (!vanishing) return kExitFailure;
    const auto verdict = is_minimal_vanishing(s);
    io.out << "top prime: " << top_prime(s) << "\n";
    if (verdict.minimal) {
        io.out << "minimal: yes\n";
    } else {
        io.out << "minimal: no (" << tag(*verdict.failing_condition) << ")\n";
        return kExitFailure;
    }
    const Parity p = parity(s);
    io.out << "parity: (" << p.larger << "," << p.smaller << ")\n";
    const TypeSum t = infer_type(s);
    io.out << "type: " << render_type_latex(t) << "\n";
    io.out << "type text: " << render_type(t) << "\n";
    return kExitOk;
}

int cmd_enumerate(const std::string& type_text, const std::optional<std::filesystem::path>& db, int threads, Streams io) {
    const TypeSum t = parse_type(type_text);
    if (t.components.size() != 1) {
        io.err << "error: enumerate expects a minimal type, not a sum\n";
        return kExitUsage;
    }
    EnumerationCache cache = db ? open_cache(*db, io) : EnumerationCache();
    EnumerationOptions opts;
    opts.threads = threads;
    const auto classes = sorou_of_minvan_type(t.components.front(), cache, opts);
    std::size_t minimal = 0;
    for (const auto& s : classes) {
        const bool ok = is_minimal_vanishing(s).minimal;
        io.out << render_sorou(s) << "\t" << (ok ? "minimal" : "not-minimal");
        if (ok) {
            ++minimal;
            const Parity p = parity(s);
            io.out << "\tparity=(" << p.larger << "," << p.smaller << ")\theight=" << s.height();
        }
        io.out << "\n";
    }
    io.out << "classes: " << classes.size() << ", minimal: " << minimal << "\n";
    if (minimal > 0) {
        const TypeRecord r = type_statistics(t.components.front(), cache, opts);
        io.out << "parities: " << format_parities(r.parities) << "\n";
    }
    if (db) save_cache(cache.snapshot(), cache_path(*db));
    return minimal > 0 ? kExitOk : kExitFailure;
}

int cmd_report(const std::filesystem::path& db_path, const std::string& format, const std::optional<std::filesystem::path>& out,
               Streams io) {
    if (format != "csv" && format != "latex") {
        io.err << "error: unknown report format '" << format << "' (expected csv or latex)\n";
        return kExitUsage;
    }
    const TypeDatabase db = load_db(db_path);
    const std::string text = format == "csv" ? csv_report(db) : latex_report(db);
    if (out)
        atomic_write(*out, text);
    else
        io.out << text;
    return kExitOk;
}

int cmd_phi(std::int64_t n, Streams io) {
    if (n < 1) {
        io.err << "error: n must be positive\n";
        return kExitUsage;
    }
    const IntPolynomial& phi = cyclotomic_poly(n);
    io.out << "Phi_" << n << " degree " << phi.degree() << "\n";
    io.out << "coefficients (lowest degree first):";
    std::vector<std::pair<int, BigInt>> large;
    for (int k = 0; k <= phi.degree(); ++k) {
        const BigInt& c = phi.coefficients()[static_cast<std::size_t>(k)];
        io.out << " " << c;
        if (c > 1 || c < -1) large.emplace_back(k, c);
    }
    io.out << "\n";
    if (large.empty()) {
        io.out << "all coefficients in {-1,0,1}\n";
    } else {
        io.out << "coefficients outside {-1,0,1}:";
        for (const auto& [k, c] : large) io.out << " x^" << k << ":" << c;
        io.out << "\n";
    }
    return kExitOk;
}

std::string render_svg(const PlotSpec& spec) {
    const double margin = 20.0;
    double reach = spec.radius;
    for (const auto& t : spec.sorou.terms()) reach = std::max(reach, spec.radius + spec.step * (t.count - 1));
    const double half = reach + margin;
    std::ostringstream svg;
    svg << std::fixed << std::setprecision(3);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * half << "\" height=\"" << 2 * half
        << "\" viewBox=\"" << -half << " " << -half << " " << 2 * half << " " << 2 * half << "\">\n";
    svg << "  <line x1=\"" << -half << "\" y1=\"0\" x2=\"" << half << "\" y2=\"0\" stroke=\"gray\"/>\n";
    svg << "  <line x1=\"0\" y1=\"" << -half << "\" x2=\"0\" y2=\"" << half << "\" stroke=\"gray\"/>\n";
    svg << "  <circle cx=\"0\" cy=\"0\" r=\"" << spec.radius
        << "\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
    for (const auto& t : spec.sorou.terms()) {
        const double angle = 2 * std::numbers::pi * static_cast<double>(t.root.power) / static_cast<double>(t.root.order);
        const double r = spec.radius + spec.step * (t.count - 1);
        // SVG y grows downward.
        const double x = r * std::cos(angle), y = -r * std::sin(angle);
        svg << "  <line x1=\"0\" y1=\"0\" x2=\"" << x << "\" y2=\"" << y << "\" stroke=\"black\"/>\n";
        svg << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\" fill=\"black\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

int cmd_plot(const std::string& sorou_text, const std::filesystem::path& out, double radius, double step, Streams io) {
    if (radius <= 0 || step < 0) {
        io.err << "error: radius must be positive and step nonnegative\n";
        return kExitUsage;
    }
    PlotSpec spec{parse_sorou(sorou_text), out, radius, step};
    atomic_write(out, render_svg(spec));
    io.out << "wrote " << out.string() << "\n";
    return kExitOk;
}

}  // namespace minvan::cli
