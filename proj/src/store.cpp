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

#include "minvan/store.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <system_error>

namespace minvan {

std::vector<MinVanType> minimal_types(const TypeDatabase& db) {
    std::vector<MinVanType> out;
    out.reserve(db.records.size());
    for (const auto& r : db.records) out.push_back(r.type.components.front());
    return out;
}

namespace {

std::string where(std::size_t line) { return "line " + std::to_string(line) + ": "; }

void check_record(const TypeRecord& r, const std::string& ctx) {
    if (r.type.components.size() != 1) throw Error(ctx + "type is not minimal");
    const auto& t = r.type.components.front();
    if (auto e = check_invariants(t)) throw Error(ctx + *e);
    if (r.weight != type_weight(t)) throw Error(ctx + "weight does not match the type");
    if (r.top_prime != t.p) throw Error(ctx + "top prime does not match the type");
    if (r.partition != weight_partition(t)) throw Error(ctx + "weight partition does not match the type");
    if (r.has_statistics) {
        const bool eq = std::any_of(r.parities.begin(), r.parities.end(), [](const Parity& p) { return p.larger == p.smaller; });
        if (eq != r.equisigned) throw Error(ctx + "equisigned flag disagrees with the parities");
        if (r.parities.empty() || r.heights.empty() || r.relative_orders.empty()) throw Error(ctx + "empty statistics");
    }
}

template <class T, class Fn>
std::string join(const T& items, const std::string& sep, Fn&& fn) {
    std::string out;
    for (const auto& x : items) {
        if (!out.empty()) out += sep;
        out += fn(x);
    }
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::int64_t to_int(const std::string& s, const std::string& ctx) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || s.size() > 15)
        throw Error(ctx + "expected a nonnegative integer, got '" + s + "'");
    return std::stoll(s);
}

}  // namespace

void validate_db(const TypeDatabase& db) {
    for (std::size_t i = 0; i < db.records.size(); ++i) {
        const auto& r = db.records[i];
        const std::string ctx = "record " + std::to_string(i + 1) + ": ";
        check_record(r, ctx);
        if (r.weight > db.max_complete_weight) throw Error(ctx + "weight exceeds the complete weight");
        if (i > 0) {
            const auto& prev = db.records[i - 1];
            if (prev.weight > r.weight || compare_types(prev.type, r.type) >= 0)
                throw Error(ctx + "records are not strictly sorted");
        }
    }
}

std::string serialize_db(const TypeDatabase& db) {
    std::string out = "minvan-db v1 maxweight=" + std::to_string(db.max_complete_weight) +
                      " collapse=" + (db.collapse ? "on" : "off") + "\n";
    auto num = [](auto x) { return std::to_string(x); };
    for (const auto& r : db.records) {
        out += std::to_string(r.weight) + "\t" + render_type(r.type) + "\t";
        if (r.has_statistics) {
            out += join(r.relative_orders, ";", num) + "\t" + join(r.partition, ";", num) + "\t" +
                   join(r.parities, ";", [](const Parity& p) {
                       return "(" + std::to_string(p.larger) + "," + std::to_string(p.smaller) + ")";
                   }) +
                   "\t" + join(r.heights, ";", num) + "\t" + (r.equisigned ? "true" : "false");
        } else {
            out += "-\t" + join(r.partition, ";", num) + "\t-\t-\t-";
        }
        out += "\n";
    }
    return out;
}

TypeDatabase parse_db(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw Error(where(1) + "missing header");
    TypeDatabase db;
    {
        const auto words = split(line, ' ');
        if (words.size() != 4 || words[0] != "minvan-db") throw Error(where(1) + "not a minvan database header");
        if (words[1] != "v1") throw Error(where(1) + "unsupported version '" + words[1] + "'");
        if (words[2].rfind("maxweight=", 0) != 0) throw Error(where(1) + "missing maxweight");
        db.max_complete_weight = static_cast<int>(to_int(words[2].substr(10), where(1)));
        if (words[3] == "collapse=on")
            db.collapse = true;
        else if (words[3] == "collapse=off")
            db.collapse = false;
        else
            throw Error(where(1) + "bad collapse flag");
    }
    std::size_t n = 1;
    while (std::getline(in, line)) {
        ++n;
        const std::string ctx = where(n);
        const auto f = split(line, '\t');
        if (f.size() != 7) throw Error(ctx + "expected 7 tab-separated fields, got " + std::to_string(f.size()));
        TypeRecord r;
        r.weight = static_cast<int>(to_int(f[0], ctx));
        try {
            r.type = parse_type(f[1]);
        } catch (const Error& e) {
            throw Error(ctx + e.what());
        }
        if (render_type(r.type) != f[1]) throw Error(ctx + "type text is not in canonical form");
        if (r.type.components.size() != 1) throw Error(ctx + "type is not minimal");
        r.top_prime = r.type.components.front().p;
        for (const auto& x : split(f[3], ';')) r.partition.push_back(static_cast<int>(to_int(x, ctx)));
        const bool stats = f[2] != "-";
        if (stats != (f[4] != "-") || stats != (f[5] != "-") || stats != (f[6] != "-"))
            throw Error(ctx + "statistics are partially missing");
        r.has_statistics = stats;
        if (stats) {
            for (const auto& x : split(f[2], ';')) r.relative_orders.insert(to_int(x, ctx));
            for (const auto& x : split(f[4], ';')) {
                if (x.size() < 5 || x.front() != '(' || x.back() != ')') throw Error(ctx + "bad parity '" + x + "'");
                const auto ab = split(x.substr(1, x.size() - 2), ',');
                if (ab.size() != 2) throw Error(ctx + "bad parity '" + x + "'");
                const int a = static_cast<int>(to_int(ab[0], ctx)), b = static_cast<int>(to_int(ab[1], ctx));
                if (a < b) throw Error(ctx + "parity pair not ordered");
                r.parities.insert({a, b});
            }
            for (const auto& x : split(f[5], ';')) r.heights.insert(static_cast<int>(to_int(x, ctx)));
            if (f[6] == "true")
                r.equisigned = true;
            else if (f[6] != "false")
                throw Error(ctx + "bad equisigned flag");
        }
        check_record(r, ctx);
        if (r.weight > db.max_complete_weight) throw Error(ctx + "weight exceeds maxweight");
        if (!db.records.empty()) {
            const auto& prev = db.records.back();
            if (prev.weight > r.weight || compare_types(prev.type, r.type) >= 0)
                throw Error(ctx + "records are not strictly sorted");
        }
        db.records.push_back(std::move(r));
    }
    return db;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw Error("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void save_db(const TypeDatabase& db, const std::filesystem::path& path) {
    validate_db(db);
    atomic_write(path, serialize_db(db));
}

TypeDatabase load_db(const std::filesystem::path& path) {
    try {
        return parse_db(read_file(path));
    } catch (const Error& e) {
        throw Error(path.string() + ": " + e.what());
    }
}

std::string serialize_cache(const SorouCache& cache) {
    std::string out;
    for (const auto& [type, list] : cache)
        out += type + "\t" + join(list, ",", [](const Sorou& s) { return render_sorou(s); }) + "\n";
    return out;
}

SorouCache parse_cache(const std::string& text) {
    SorouCache cache;
    std::istringstream in(text);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) throw Error(where(n) + "missing tab");
        const std::string type = line.substr(0, tab);
        try {
            if (render_type(parse_type(type)) != type) throw Error("type text is not in canonical form");
            std::vector<Sorou> list;
            const std::string rest = line.substr(tab + 1);
            if (!rest.empty())
                for (const auto& s : split(rest, ',')) {
                    Sorou x = parse_sorou(s);
                    if (render_sorou(x) != s) throw Error("sorou text is not in canonical form");
                    list.push_back(std::move(x));
                }
            if (!cache.emplace(type, std::move(list)).second) throw Error("duplicate type");
        } catch (const Error& e) {
            throw Error(where(n) + e.what());
        }
    }
    return cache;
}

void save_cache(const SorouCache& cache, const std::filesystem::path& path) { atomic_write(path, serialize_cache(cache)); }

SorouCache load_cache(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) return {};
    try {
        return parse_cache(read_file(path));
    } catch (const Error& e) {
        throw Error(path.string() + ": " + e.what());
    }
}

namespace {

void require_statistics(const TypeRecord& r) {
    if (!r.has_statistics) throw Error("missing statistics for " + render_type(r.type));
}

std::vector<int> nonincreasing(std::vector<int> v) {
    std::sort(v.rbegin(), v.rend());
    return v;
}

std::vector<Parity> descending(const std::set<Parity>& s) { return {s.rbegin(), s.rend()}; }

}  // namespace

std::string csv_row(const TypeRecord& r) {
    require_statistics(r);
    auto num = [](auto x) { return std::to_string(x); };
    return std::to_string(r.weight) + ", " + std::to_string(r.top_prime) + ", " + join(r.relative_orders, ";", num) + ", (" +
           join(nonincreasing(r.partition), ";", num) + "), " + render_type_latex(r.type, ";") + ", " +
           join(r.heights, ";", num) + ", " +
           join(descending(r.parities), ";",
                [](const Parity& p) { return "(" + std::to_string(p.larger) + ";" + std::to_string(p.smaller) + ")"; }) +
           ", " + (r.equisigned ? "True" : "False");
}

std::string csv_report(const TypeDatabase& db) {
    std::string out = std::string(kCsvHeader) + "\n";
    for (const auto& r : db.records) out += csv_row(r) + "\n";
    return out;
}

std::string latex_report(const TypeDatabase& db) {
    auto num = [](auto x) { return std::to_string(x); };
    std::string out =
        "\\begin{longtable}{c|c|c|c|c|l|c}\n"
        "Weight & Top prime & Relative order & Weight partition & Type & Possible parities & Heights \\\\ \\hline\\hline\n"
        "\\endhead\n";
    int last = 0;
    for (const auto& r : db.records) {
        require_statistics(r);
        if (last != 0) out += r.weight != last ? "\\hline\\hline\n" : "\\cline{2-7}\n";
        out += (r.weight != last ? "$" + std::to_string(r.weight) + "$" : std::string()) + " & $" + num(r.top_prime) +
               "$ & $" + join(r.relative_orders, ",", num) + "$ & $(" + join(r.partition, ",", num) + ")$ & $" +
               render_type_latex(r.type) + "$ & $" +
               join(descending(r.parities), ",\\,",
                    [](const Parity& p) { return "(" + std::to_string(p.larger) + "," + std::to_string(p.smaller) + ")"; }) +
               "$ & $" + join(r.heights, ",", num) + "$ \\\\\n";
        last = r.weight;
    }
    out += "\\hline\n\\end{longtable}\n";
    return out;
}

void write_csv_report(const TypeDatabase& db, const std::filesystem::path& path) { atomic_write(path, csv_report(db)); }

void write_latex_report(const TypeDatabase& db, const std::filesystem::path& path) { atomic_write(path, latex_report(db)); }

}  // namespace minvan
