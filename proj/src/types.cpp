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

#include "minvan/types.hpp"

#include <algorithm>
#include <functional>

#include "minvan/minimality.hpp"

namespace minvan {

bool operator==(const MinVanType& a, const MinVanType& b) {
    return a.p == b.p && a.f0 == b.f0 && a.subtypes == b.subtypes;
}

bool operator==(const TypeSum& a, const TypeSum& b) { return a.components == b.components; }

namespace {

template <class T>
void sort_non_increasing(std::vector<T>& v) {
    std::sort(v.begin(), v.end(), [](const T& a, const T& b) { return compare_types(a, b) > 0; });
}

}  // namespace

MinVanType make_minvan(std::int64_t p, const Sorou& f0, std::vector<TypeSum> subtypes) {
    if (f0.empty()) throw Error("type with empty f0");
    sort_non_increasing(subtypes);
    return MinVanType{p, canonicalize(f0), std::move(subtypes)};
}

TypeSum make_sum(std::vector<MinVanType> components) {
    if (components.empty()) throw Error("type sum with no components");
    sort_non_increasing(components);
    return TypeSum{std::move(components)};
}

TypeRecord make_record(const MinVanType& t) {
    TypeRecord r;
    r.type = single(t);
    r.weight = type_weight(t);
    r.top_prime = t.p;
    r.partition = weight_partition(t);
    return r;
}

MinVanType rp(std::int64_t p) { return MinVanType{p, Sorou{kOne}, {}}; }

int type_weight(const MinVanType& t) {
    const int w0 = t.f0.weight();
    int w = static_cast<int>(t.p - static_cast<std::int64_t>(t.subtypes.size())) * w0;
    for (const auto& s : t.subtypes) w += type_weight(s) - w0;
    return w;
}

int type_weight(const TypeSum& t) {
    int w = 0;
    for (const auto& c : t.components) w += type_weight(c);
    return w;
}

std::vector<int> weight_partition(const MinVanType& t) {
    const int w0 = t.f0.weight();
    std::vector<int> out;
    for (const auto& s : t.subtypes) out.push_back(type_weight(s) - w0);
    while (static_cast<std::int64_t>(out.size()) < t.p) out.push_back(w0);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_pure_r2_sum(const TypeSum& t) {
    return std::all_of(t.components.begin(), t.components.end(),
                       [](const MinVanType& c) { return c.p == 2 && c.subtypes.empty(); });
}

namespace {

std::strong_ordering compare_phase(const Root& a, const Root& b) {
    return a.power * b.order <=> b.power * a.order;
}

}  // namespace

std::strong_ordering compare_types(const MinVanType& a, const MinVanType& b) {
    if (auto c = type_weight(a) <=> type_weight(b); c != 0) return c;
    if (auto c = a.p <=> b.p; c != 0) return c;
    if (auto c = a.f0.weight() <=> b.f0.weight(); c != 0) return c;
    const auto ra = a.f0.roots();
    const auto rb = b.f0.roots();
    for (std::size_t i = 0; i < ra.size(); ++i)
        if (auto c = compare_phase(ra[i], rb[i]); c != 0) return c;
    if (auto c = a.subtypes.size() <=> b.subtypes.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.subtypes.size(); ++i)
        if (auto c = compare_types(a.subtypes[i], b.subtypes[i]); c != 0) return c;
    return std::strong_ordering::equal;
}

std::strong_ordering compare_types(const TypeSum& a, const TypeSum& b) {
    if (auto c = type_weight(a) <=> type_weight(b); c != 0) return c;
    if (auto c = a.components.size() <=> b.components.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.components.size(); ++i)
        if (auto c = compare_types(a.components[i], b.components[i]); c != 0) return c;
    return std::strong_ordering::equal;
}

std::string render_type(const MinVanType& t) {
    std::string out = "(R" + std::to_string(t.p) + ";" + render_sorou(t.f0);
    for (const auto& s : t.subtypes) out += ";" + render_type(s);
    return out + ")";
}

std::string render_type(const TypeSum& t) {
    std::string out;
    for (const auto& c : t.components) {
        if (!out.empty()) out += '&';
        out += render_type(c);
    }
    return out;
}

namespace {

class TypeParser {
   public:
    explicit TypeParser(std::string_view text) : text_(text) {}

    TypeSum parse() {
        TypeSum t = typesum();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing text", pos_);
        return t;
    }

   private:
    void expect(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    TypeSum typesum() {
        std::vector<MinVanType> comps{minvan()};
        while (accept('&')) comps.push_back(minvan());
        return make_sum(std::move(comps));
    }

    MinVanType minvan() {
        expect('(');
        expect('R');
        const std::size_t num = pos_;
        std::int64_t p = 0;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9' && p < 1'000'000) p = p * 10 + (text_[pos_++] - '0');
        if (pos_ == num) throw ParseError("expected a prime", num);
        if (!nt::is_prime(p)) throw ParseError("R index is not prime", num);
        expect(';');
        const std::size_t sorou_start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ';' && text_[pos_] != ')') ++pos_;
        Sorou f0;
        try {
            f0 = parse_sorou(text_.substr(sorou_start, pos_ - sorou_start));
        } catch (const ParseError& e) {
            throw ParseError("bad f0 sorou", sorou_start + e.position());
        }
        if (f0.count(kOne) == 0) throw ParseError("f0 must contain 1", sorou_start);
        std::vector<TypeSum> subs;
        while (accept(';')) subs.push_back(typesum());
        expect(')');
        std::sort(subs.begin(), subs.end(), [](const TypeSum& a, const TypeSum& b) { return compare_types(a, b) > 0; });
        return MinVanType{p, std::move(f0), std::move(subs)};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

TypeSum parse_type(std::string_view text) { return TypeParser(text).parse(); }

std::string render_root_latex(const Root& r) {
    if (r.order == 1) return "1";
    if (r.order == 2) return "-1";
    std::string sign;
    std::int64_t o = r.order, k = r.power;
    if (o % 2 == 0 && (o / 2) % 2 == 1) {
        sign = "-";
        k = nt::mod((k + o / 2) / 2, o / 2);
        o /= 2;
    }
    std::string out = sign + "\\nu_" + (o >= 10 ? "{" + std::to_string(o) + "}" : std::to_string(o));
    if (k != 1) out += "^" + (k >= 10 ? "{" + std::to_string(k) + "}" : std::to_string(k));
    return out;
}

std::string render_sorou_latex(const Sorou& s) {
    std::string out;
    for (const auto& r : s.roots()) {
        std::string term = render_root_latex(r);
        if (!out.empty() && term.front() != '-') out += '+';
        out += term;
    }
    return out;
}

namespace {

std::string subtype_latex(const TypeSum& t, std::string_view sep) {
    if (t.components.size() == 1) return render_type_latex(t.components.front(), sep);
    return "(" + render_type_latex(t, sep) + ")";
}

}  // namespace

std::string render_type_latex(const MinVanType& t, std::string_view sep) {
    const std::string head = "R_" + (t.p >= 10 ? "{" + std::to_string(t.p) + "}" : std::to_string(t.p));
    const bool trivial_f0 = t.f0 == Sorou{kOne};
    if (t.subtypes.empty() && trivial_f0) return head;
    std::string out = "(" + head + ":";
    if (!trivial_f0) out += render_sorou_latex(t.f0) + (t.subtypes.empty() ? "" : ":");
    // Displayed lightest first.
    const std::vector<TypeSum> subs(t.subtypes.rbegin(), t.subtypes.rend());
    for (std::size_t i = 0; i < subs.size();) {
        std::size_t j = i;
        while (j < subs.size() && subs[j] == subs[i]) ++j;
        if (i) out += sep;
        if (j - i > 1) out += std::to_string(j - i);
        out += subtype_latex(subs[i], sep);
        i = j;
    }
    return out + ")";
}

std::string render_type_latex(const TypeSum& t, std::string_view sep) {
    std::string out;
    for (auto it = t.components.rbegin(); it != t.components.rend(); ++it) {
        if (!out.empty()) out += "\\oplus ";
        out += render_type_latex(*it, sep);
    }
    return out;
}

std::optional<std::string> check_invariants(const MinVanType& t) {
    if (!nt::is_prime(t.p)) return "R index " + std::to_string(t.p) + " is not prime";
    if (t.f0.empty() || t.f0.count(kOne) == 0) return "f0 does not contain 1";
    if (nt::primorial_below(t.p) % order(t.f0) != 0) return "f0 order does not divide the primes below " + std::to_string(t.p);
    if (has_vanishing_subsorou(t.f0, true)) return "f0 has a vanishing subsorou";
    if (static_cast<std::int64_t>(t.subtypes.size()) > t.p - 1) return "more than p - 1 subtypes";
    if (t.subtypes.empty() && t.f0 != Sorou{kOne}) return "f0 must be 1 when all slots agree";
    const int w0 = t.f0.weight();
    for (const auto& s : t.subtypes) {
        if (type_weight(s) < 2 * w0) return "subtype lighter than twice w(f0)";
        if (static_cast<int>(s.components.size()) > w0) return "subtype has more than w(f0) components";
        if (is_pure_r2_sum(s)) return "subtype is a sum of R_2";
        for (const auto& c : s.components) {
            if (c.p >= t.p) return "subtype prime not below " + std::to_string(t.p);
            if (auto e = check_invariants(c)) return e;
        }
    }
    for (std::size_t i = 1; i < t.subtypes.size(); ++i)
        if (compare_types(t.subtypes[i - 1], t.subtypes[i]) < 0) return "subtypes not sorted";
    return std::nullopt;
}

namespace {

/// Rotations z with part < z * v, from the candidates tau / omega.
std::vector<Root> embeddings(const Sorou& part, const Sorou& v) {
    std::vector<Root> out;
    const Root tau = part.terms().front().root;
    for (const auto& t : v.terms()) {
        const Root z = tau * inverse(t.root);
        if (is_subsorou(part, rotate(v, z))) out.push_back(z);
    }
    return out;
}

/// Places one copy of each component so that together they cover f0, each
/// component covering a nonempty share of its terms.
std::optional<Sorou> cover_f0(const std::vector<Sorou>& comps, const Sorou& f0) {
    const auto roots = f0.roots();
    const std::size_t m = comps.size();
    if (m == 0 || m > roots.size()) return std::nullopt;
    std::vector<std::size_t> assign(roots.size(), 0);
    while (true) {
        std::vector<std::vector<Root>> parts(m);
        for (std::size_t i = 0; i < roots.size(); ++i) parts[assign[i]].push_back(roots[i]);
        if (std::all_of(parts.begin(), parts.end(), [](const auto& p) { return !p.empty(); })) {
            Sorou total;
            bool ok = true;
            for (std::size_t c = 0; c < m && ok; ++c) {
                const auto z = embeddings(Sorou(parts[c]), comps[c]);
                if (z.empty())
                    ok = false;
                else
                    total = total + rotate(comps[c], z.front());
            }
            if (ok) return total;
        }
        std::size_t i = roots.size();
        while (i > 0 && assign[i - 1] + 1 == m) assign[--i] = 0;
        if (i == 0) return std::nullopt;
        ++assign[i - 1];
    }
}

}  // namespace

Sorou representative_sorou(const MinVanType& t) {
    const std::size_t p = static_cast<std::size_t>(t.p);
    std::vector<Sorou> parts(p, t.f0);
    for (std::size_t i = 0; i < t.subtypes.size(); ++i) {
        std::vector<Sorou> comps;
        for (const auto& c : t.subtypes[i].components) comps.push_back(representative_sorou(c));
        const auto v = cover_f0(comps, t.f0);
        if (!v) throw Error("unrealizable assembly for " + render_type(t));
        parts[i + 1] = subtract(t.f0, *v);
    }
    return from_subsidiary({t.p, std::move(parts)});
}

Sorou representative_sorou(const TypeSum& t) {
    Sorou out;
    for (const auto& c : t.components) out = out + representative_sorou(c);
    return out;
}

TypeSum infer_type(const Sorou& s) {
    if (!is_minimal_vanishing(s).minimal) throw Error("infer_type: sorou is not minimal vanishing");
    const auto d = to_subsidiary(s);
    const Sorou& f0 = d.parts.front();
    std::vector<TypeSum> subs;
    for (std::size_t j = 1; j < d.parts.size(); ++j) {
        if (d.parts[j] == f0) continue;
        std::vector<MinVanType> comps;
        for (const auto& piece : decompose_into_minimal(minus(f0, d.parts[j])))
            comps.push_back(infer_type(piece).components.front());
        subs.push_back(make_sum(std::move(comps)));
    }
    return single(make_minvan(d.top_prime, f0, std::move(subs)));
}

MinVanType galois_type(const MinVanType& t, std::int64_t k) {
    std::vector<Root> roots;
    for (const auto& r : t.f0.roots()) {
        if (std::gcd(nt::mod(k, r.order), r.order) != 1) throw Error("galois_type: exponent not coprime to the f0 order");
        roots.push_back(make_root(r.order, r.power * k));
    }
    std::vector<TypeSum> subs;
    for (const auto& s : t.subtypes) subs.push_back(galois_type(s, k));
    return make_minvan(t.p, Sorou(roots), std::move(subs));
}

TypeSum galois_type(const TypeSum& t, std::int64_t k) {
    std::vector<MinVanType> comps;
    for (const auto& c : t.components) comps.push_back(galois_type(c, k));
    return make_sum(std::move(comps));
}

TypeSum conjugate_type(const TypeSum& t) { return galois_type(t, -1); }

namespace {

std::int64_t f0_order_lcm(const MinVanType& t) {
    std::int64_t l = order(t.f0);
    for (const auto& s : t.subtypes) l = std::lcm(l, f0_order_lcm(s));
    return l;
}

}  // namespace

std::int64_t f0_order_lcm(const TypeSum& t) {
    std::int64_t l = 1;
    for (const auto& c : t.components) l = std::lcm(l, f0_order_lcm(c));
    return l;
}

TypeSum galois_canonical(const TypeSum& t) {
    const std::int64_t l = f0_order_lcm(t);
    TypeSum best = galois_type(t, 1);
    for (std::int64_t k = 2; k < l; ++k) {
        if (std::gcd(k, l) != 1) continue;
        TypeSum c = galois_type(t, k);
        if (compare_types(c, best) < 0) best = std::move(c);
    }
    return best;
}

MinVanType galois_canonical(const MinVanType& t) { return galois_canonical(single(t)).components.front(); }

}  // namespace minvan
