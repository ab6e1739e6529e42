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

#include "minvan/minimality.hpp"

#include <algorithm>
#include <complex>
#include <unordered_set>

#include "minvan/cyclotomic.hpp"

namespace minvan {

std::string_view tag(FailingCondition c) {
    switch (c) {
        case FailingCondition::ValueZeroF0: return "value-zero-f0";
        case FailingCondition::InnerVanishingSubsorou: return "inner-vanishing-subsorou";
        case FailingCondition::CommonSubvalue: return "common-subvalue";
        case FailingCondition::NotVanishing: return "not-vanishing";
    }
    return "unknown";
}

std::int64_t top_prime(const Sorou& s) {
    const std::int64_t d = relative_order(s);
    if (d == 1) throw Error("no top prime");
    if (!nt::is_squarefree(d)) throw Error("relative order " + std::to_string(d) + " is not squarefree");
    return nt::prime_factors(d).back();
}

namespace {

using Coeffs = std::vector<std::int64_t>;

struct CoeffsHash {
    std::size_t operator()(const Coeffs& c) const noexcept {
        std::size_t h = c.size();
        for (auto x : c) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

using CoeffSet = std::unordered_set<Coeffs, CoeffsHash>;

bool all_zero(const Coeffs& c) {
    return std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 0; });
}

/// Visits the residue at modulus m of every proper nonempty subsorou of f.
template <class Fn>
void for_each_subresidue(const Sorou& f, std::int64_t m, Fn&& fn) {
    if (f.weight() > kSubsetGuard)
        throw Error("subset explosion: weight " + std::to_string(f.weight()) + " exceeds " + std::to_string(kSubsetGuard));
    const auto& terms = f.terms();
    std::vector<Coeffs> rows;
    rows.reserve(terms.size());
    for (const auto& t : terms) rows.push_back(residue_at(Sorou{t.root}, m).coefficients);
    Coeffs acc(rows.empty() ? 0 : rows.front().size(), 0);
    int picked = 0;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == terms.size()) {
            if (picked > 0 && picked < f.weight()) fn(acc);
            return;
        }
        self(self, i + 1);
        const auto& row = rows[i];
        for (int c = 1; c <= terms[i].count; ++c) {
            for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += row[k];
            ++picked;
            self(self, i + 1);
        }
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] -= terms[i].count * row[k];
        picked -= terms[i].count;
    };
    rec(rec, 0);
}

MinimalityVerdict fail(bool vanishing, FailingCondition c) { return {vanishing, false, c}; }

}  // namespace

MinimalityVerdict is_minimal_vanishing(const Sorou& s) {
    if (s.empty()) throw Error("empty sorou");
    if (std::abs(numeric_value(s)) > kNumericNonzero) return fail(false, FailingCondition::NotVanishing);
    const Sorou t = anchor(s);
    const std::int64_t d = order(t);
    if (d == 1) return fail(false, FailingCondition::NotVanishing);
    if (!nt::is_squarefree(d)) {
        // Minimal vanishing sorou have squarefree relative order.
        const bool v = is_vanishing(t);
        return fail(v, v ? FailingCondition::InnerVanishingSubsorou : FailingCondition::NotVanishing);
    }
    const auto dec = to_subsidiary(t);
    const std::int64_t m = d / dec.top_prime;

    std::vector<Residue> values;
    values.reserve(dec.parts.size());
    for (const auto& f : dec.parts) values.push_back(residue_at(f, m));
    for (const auto& v : values)
        if (v != values.front()) return fail(false, FailingCondition::NotVanishing);
    if (values.front().is_zero()) return fail(true, FailingCondition::ValueZeroF0);

    // Process distinct parts lightest first; equal parts give equal subvalue sets.
    std::vector<Sorou> parts = dec.parts;
    std::sort(parts.begin(), parts.end(), [](const Sorou& a, const Sorou& b) {
        return a.weight() != b.weight() ? a.weight() < b.weight() : a < b;
    });
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());

    bool inner_vanishing = false;
    bool common = parts.front().weight() > 1;
    CoeffSet shared;
    bool first = true;
    for (const auto& f : parts) {
        CoeffSet next;
        for_each_subresidue(f, m, [&](const Coeffs& c) {
            if (all_zero(c)) inner_vanishing = true;
            if (!common) return;
            if (first || shared.count(c)) next.insert(c);
        });
        if (inner_vanishing) break;
        if (common) {
            shared = std::move(next);
            common = !shared.empty();
        }
        first = false;
    }
    if (inner_vanishing) return fail(true, FailingCondition::InnerVanishingSubsorou);
    if (common) return fail(true, FailingCondition::CommonSubvalue);
    return {true, true, std::nullopt};
}

namespace {

/// DFS over sub-multisets with a running complex sum; exact check only when
/// the floating value is near zero. Stops at the first hit when fn returns true.
template <class Fn>
bool search_subsorous(const Sorou& s, int min_weight, int max_weight, Fn&& fn) {
    if (s.weight() > kSubsetGuard)
        throw Error("subset explosion: weight " + std::to_string(s.weight()) + " exceeds " + std::to_string(kSubsetGuard));
    const auto& terms = s.terms();
    std::vector<std::complex<double>> z;
    for (const auto& t : terms) z.push_back(to_complex(t.root));
    std::vector<Sorou::Term> chosen;
    std::complex<double> acc{0.0, 0.0};
    int picked = 0;
    bool stop = false;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (stop) return;
        if (i == terms.size()) {
            if (picked >= min_weight && picked <= max_weight && picked > 0 && std::abs(acc) < kNumericNonzero) {
                const Sorou g = Sorou::from_terms(chosen);
                if (is_vanishing(g) && fn(g)) stop = true;
            }
            return;
        }
        self(self, i + 1);
        const int room = std::min(terms[i].count, max_weight - picked);
        for (int c = 1; c <= room && !stop; ++c) {
            if (c == 1)
                chosen.push_back({terms[i].root, 1});
            else
                ++chosen.back().count;
            acc += z[i];
            ++picked;
            self(self, i + 1);
        }
        if (room > 0) {
            chosen.pop_back();
            acc -= static_cast<double>(room) * z[i];
            picked -= room;
        }
    };
    rec(rec, 0);
    return stop;
}

}  // namespace

bool is_minimal_vanishing_bruteforce(const Sorou& s) {
    if (s.empty()) throw Error("empty sorou");
    if (!is_vanishing(s)) return false;
    return !search_subsorous(s, 1, s.weight() - 1, [](const Sorou&) { return true; });
}

bool has_vanishing_subsorou(const Sorou& s, bool include_self) {
    if (s.empty()) return false;
    return search_subsorous(s, 1, include_self ? s.weight() : s.weight() - 1, [](const Sorou&) { return true; });
}

std::vector<Sorou> decompose_into_minimal(const Sorou& s) {
    if (!is_vanishing(s)) throw Error("decompose_into_minimal: sorou does not vanish");
    std::vector<Sorou> out;
    Sorou rest = s;
    while (!rest.empty()) {
        std::optional<Sorou> best;
        std::string best_text;
        for (int w = 2; w <= rest.weight() && !best; ++w) {
            search_subsorous(rest, w, w, [&](const Sorou& g) {
                if (g.weight() != w) return false;
                std::string text = render_sorou(g);
                if (!best || text < best_text) {
                    best = g;
                    best_text = std::move(text);
                }
                return false;
            });
        }
        if (!best) throw Error("decompose_into_minimal: remainder does not vanish");
        out.push_back(*best);
        rest = remove(rest, *best);
    }
    return out;
}

}  // namespace minvan
