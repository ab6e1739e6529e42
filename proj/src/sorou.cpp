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

#include "minvan/sorou.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace minvan {

Root make_root(std::int64_t order, std::int64_t power) {
    if (order <= 0) throw Error("make_root: order must be positive, got " + std::to_string(order));
    const std::int64_t p = nt::mod(power, order);
    if (p == 0) return kOne;
    const std::int64_t g = std::gcd(order, p);
    return Root{order / g, p / g};
}

Root operator*(const Root& a, const Root& b) {
    const std::int64_t l = std::lcm(a.order, b.order);
    return make_root(l, a.power * (l / a.order) + b.power * (l / b.order));
}

Root inverse(const Root& r) { return make_root(r.order, r.order - r.power); }

std::complex<double> to_complex(const Root& r) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r.power) / static_cast<double>(r.order);
    return {std::cos(angle), std::sin(angle)};
}

Sorou::Sorou(std::vector<Root> roots) {
    std::sort(roots.begin(), roots.end());
    for (const auto& r : roots) {
        if (!terms_.empty() && terms_.back().root == r)
            ++terms_.back().count;
        else
            terms_.push_back({r, 1});
    }
    weight_ = static_cast<int>(roots.size());
}

Sorou Sorou::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.root < b.root; });
    Sorou s;
    for (const auto& t : terms) {
        if (t.count < 0) throw Error("negative multiplicity");
        if (t.count == 0) continue;
        if (!s.terms_.empty() && s.terms_.back().root == t.root)
            s.terms_.back().count += t.count;
        else
            s.terms_.push_back(t);
        s.weight_ += t.count;
    }
    return s;
}

int Sorou::height() const noexcept {
    int h = 0;
    for (const auto& t : terms_) h = std::max(h, t.count);
    return h;
}

int Sorou::count(const Root& r) const noexcept {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), r, [](const Term& t, const Root& x) { return t.root < x; });
    return (it != terms_.end() && it->root == r) ? it->count : 0;
}

std::vector<Root> Sorou::roots() const {
    std::vector<Root> out;
    out.reserve(static_cast<std::size_t>(weight_));
    for (const auto& t : terms_)
        for (int k = 0; k < t.count; ++k) out.push_back(t.root);
    return out;
}

std::strong_ordering operator<=>(const Sorou& a, const Sorou& b) noexcept {
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        const auto& x = a.terms_[i];
        const auto& y = b.terms_[j];
        if (auto c = x.root <=> y.root; c != 0) return c;
        if (x.count == y.count) {
            ++i;
            ++j;
            continue;
        }
        // The shorter run is followed by a strictly larger root, or by nothing.
        if (x.count < y.count) return (i + 1 < a.terms_.size()) ? std::strong_ordering::greater : std::strong_ordering::less;
        return (j + 1 < b.terms_.size()) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (i < a.terms_.size()) return std::strong_ordering::greater;
    if (j < b.terms_.size()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

Sorou rotate(const Sorou& s, const Root& z) {
    if (z == kOne) return s;
    std::vector<Sorou::Term> terms;
    terms.reserve(s.distinct());
    for (const auto& t : s.terms()) terms.push_back({t.root * z, t.count});
    return Sorou::from_terms(std::move(terms));
}

Sorou anchor(const Sorou& s) {
    if (s.empty()) return s;
    return rotate(s, inverse(s.terms().front().root));
}

Sorou concat(const Sorou& a, const Sorou& b) {
    std::vector<Sorou::Term> terms(a.terms());
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return Sorou::from_terms(std::move(terms));
}

Sorou minus(const Sorou& a, const Sorou& b) { return concat(a, rotate(b, kMinusOne)); }

Sorou subtract(const Sorou& a, const Sorou& b) {
    std::vector<Sorou::Term> left, right;
    std::size_t i = 0, j = 0;
    const auto& x = a.terms();
    const auto& y = b.terms();
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].root < y[j].root)) {
            left.push_back(x[i++]);
        } else if (i == x.size() || y[j].root < x[i].root) {
            right.push_back(y[j++]);
        } else {
            const int common = std::min(x[i].count, y[j].count);
            if (x[i].count > common) left.push_back({x[i].root, x[i].count - common});
            if (y[j].count > common) right.push_back({y[j].root, y[j].count - common});
            ++i;
            ++j;
        }
    }
    return concat(Sorou::from_terms(std::move(left)), rotate(Sorou::from_terms(std::move(right)), kMinusOne));
}

bool is_subsorou(const Sorou& g, const Sorou& h) {
    if (g.weight() > h.weight()) return false;
    const auto& x = g.terms();
    const auto& y = h.terms();
    std::size_t j = 0;
    for (const auto& t : x) {
        while (j < y.size() && y[j].root < t.root) ++j;
        if (j == y.size() || y[j].root != t.root || y[j].count < t.count) return false;
    }
    return true;
}

Sorou remove(const Sorou& h, const Sorou& g) {
    if (!is_subsorou(g, h)) throw Error("remove: not a subsorou");
    std::vector<Sorou::Term> terms;
    for (const auto& t : h.terms())
        if (const int left = t.count - g.count(t.root); left > 0) terms.push_back({t.root, left});
    return Sorou::from_terms(std::move(terms));
}

std::int64_t order(const Sorou& s) {
    if (s.empty()) throw Error("empty sorou");
    std::int64_t l = 1;
    for (const auto& t : s.terms()) l = std::lcm(l, t.root.order);
    return l;
}

std::int64_t relative_order(const Sorou& s) {
    if (s.empty()) throw Error("empty sorou");
    return order(anchor(s));
}

Parity parity(const Sorou& s) {
    const Sorou t = anchor(s);
    const std::int64_t d = order(t);
    if (!nt::is_squarefree(d)) throw Error("parity undefined: relative order " + std::to_string(d) + " is not squarefree");
    int odd = 0, even = 0;
    for (const auto& term : t.terms()) (term.root.order % 2 == 0 ? even : odd) += term.count;
    return {std::max(odd, even), std::min(odd, even)};
}

void for_each_proper_subsorou(const Sorou& s, const std::function<void(const Sorou&)>& fn) {
    if (s.weight() > kSubsetGuard)
        throw Error("subset explosion: weight " + std::to_string(s.weight()) + " exceeds " + std::to_string(kSubsetGuard));
    const auto& terms = s.terms();
    std::vector<Sorou::Term> chosen;
    int picked = 0;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == terms.size()) {
            if (picked > 0 && picked < s.weight()) fn(Sorou::from_terms(chosen));
            return;
        }
        for (int c = 0; c <= terms[i].count; ++c) {
            if (c > 0) chosen.push_back({terms[i].root, c});
            picked += c;
            self(self, i + 1);
            picked -= c;
            if (c > 0) chosen.pop_back();
        }
    };
    rec(rec, 0);
}

std::vector<Sorou> proper_nonempty_subsorous(const Sorou& s) {
    std::vector<Sorou> out;
    for_each_proper_subsorou(s, [&](const Sorou& g) { out.push_back(g); });
    return out;
}

std::vector<std::int64_t> exponents(const Sorou& s, std::int64_t n) {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(s.weight()));
    for (const auto& t : s.terms()) {
        if (n % t.root.order != 0) throw Error("exponents: modulus is not a multiple of the order");
        const std::int64_t e = t.root.power * (n / t.root.order);
        for (int k = 0; k < t.count; ++k) out.push_back(e);
    }
    return out;
}

Sorou from_exponents(std::span<const std::int64_t> exps, std::int64_t n) {
    std::vector<Root> roots;
    roots.reserve(exps.size());
    for (auto e : exps) roots.push_back(make_root(n, e));
    return Sorou(std::move(roots));
}

Sorou canonicalize(const Sorou& s) {
    if (s.empty()) throw Error("empty sorou");
    const std::int64_t n = order(s);
    if (n == 1) return s;
    const auto exps = exponents(s, n);
    // Orders (order, power) of nu_n^x lexicographically via a single integer key.
    auto key = [n](std::int64_t x) {
        const std::int64_t g = std::gcd(x, n);
        return (n / g) * n + x / g;
    };
    std::vector<std::int64_t> best, keys(exps.size());
    for (const auto& anchor_term : s.terms()) {
        const std::int64_t a = anchor_term.root.power * (n / anchor_term.root.order);
        for (std::size_t i = 0; i < exps.size(); ++i) keys[i] = key(nt::mod(exps[i] - a, n));
        std::sort(keys.begin(), keys.end());
        if (best.empty() || keys < best) best = keys;
    }
    std::vector<Sorou::Term> terms;
    for (auto k : best) {
        const Root r{k / n, k % n};
        if (!terms.empty() && terms.back().root == r)
            ++terms.back().count;
        else
            terms.push_back({r, 1});
    }
    return Sorou::from_terms(std::move(terms));
}

bool equivalent(const Sorou& a, const Sorou& b) {
    if (a.weight() != b.weight()) return false;
    return canonicalize(a) == canonicalize(b);
}

std::pair<Root, Root> split_root(const Root& r, std::int64_t p) {
    if (r.order % p != 0) return {kOne, r};
    const std::int64_t m = r.order / p;
    if (m % p == 0) throw Error("split_root: " + std::to_string(p) + "^2 divides the order " + std::to_string(r.order));
    const std::int64_t a = nt::mod(r.power * nt::mod_inverse(m, p), p);
    const std::int64_t b = nt::mod(r.power * nt::mod_inverse(p, m), m);
    return {make_root(p, a), make_root(m, b)};
}

SubsidiaryDecomposition to_subsidiary(const Sorou& s) {
    const Sorou t = anchor(s);
    const std::int64_t d = order(t);
    if (d == 1) throw Error("no top prime: relative order is 1");
    if (!nt::is_squarefree(d)) throw Error("relative order " + std::to_string(d) + " is not squarefree");
    const std::int64_t p = nt::prime_factors(d).back();

    std::vector<std::vector<Sorou::Term>> buckets(static_cast<std::size_t>(p));
    for (const auto& term : t.terms()) {
        const auto [top, rest] = split_root(term.root, p);
        buckets[static_cast<std::size_t>(top.power)].push_back({rest, term.count});
    }
    std::vector<Sorou> parts;
    parts.reserve(buckets.size());
    for (auto& b : buckets) parts.push_back(Sorou::from_terms(std::move(b)));

    std::size_t lightest = parts.size();
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (parts[j].empty()) continue;
        if (lightest == parts.size() || parts[j].weight() < parts[lightest].weight()) lightest = j;
    }
    SubsidiaryDecomposition out{p, {}};
    out.parts.reserve(parts.size());
    const Root unrotate = inverse(parts[lightest].terms().front().root);
    for (std::size_t k = 0; k < parts.size(); ++k) out.parts.push_back(rotate(parts[(k + lightest) % parts.size()], unrotate));
    return out;
}

Sorou from_subsidiary(const SubsidiaryDecomposition& d) {
    std::vector<Sorou::Term> terms;
    for (std::size_t j = 0; j < d.parts.size(); ++j) {
        const Root slot = make_root(d.top_prime, static_cast<std::int64_t>(j));
        for (const auto& t : d.parts[j].terms()) terms.push_back({t.root * slot, t.count});
    }
    return Sorou::from_terms(std::move(terms));
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : Error(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

std::int64_t parse_number(std::string_view text, std::size_t& pos) {
    const std::size_t start = pos;
    std::int64_t value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        if (value > 1'000'000'000'000LL) throw ParseError("number too large", start);
        value = value * 10 + (text[pos] - '0');
        ++pos;
    }
    if (pos == start) throw ParseError("expected a decimal number", start);
    return value;
}

}  // namespace

Sorou parse_sorou(std::string_view text) {
    std::vector<Root> roots;
    std::size_t pos = 0;
    while (true) {
        const std::size_t term_start = pos;
        const std::int64_t o = parse_number(text, pos);
        if (pos >= text.size() || text[pos] != ':') throw ParseError("expected ':'", pos);
        ++pos;
        const std::int64_t p = parse_number(text, pos);
        if (o == 0) throw ParseError("order must be positive", term_start);
        roots.push_back(make_root(o, p));
        if (pos == text.size()) break;
        if (text[pos] != '+') throw ParseError("expected '+'", pos);
        ++pos;
    }
    return Sorou(std::move(roots));
}

std::string render_sorou(const Sorou& s) {
    std::string out;
    for (const auto& t : s.terms()) {
        const std::string term = std::to_string(t.root.order) + ":" + std::to_string(t.root.power);
        for (int k = 0; k < t.count; ++k) {
            if (!out.empty()) out += '+';
            out += term;
        }
    }
    return out;
}

}  // namespace minvan
