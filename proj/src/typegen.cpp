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

#include "minvan/typegen.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "minvan/minimality.hpp"
#include "minvan/parallel.hpp"

namespace minvan {

std::vector<std::vector<int>> partitions_into_parts(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 1 || k > n) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int slots, int cap) -> void {
        if (slots == 0) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int x = std::min(cap, left - (slots - 1)); x >= 1; --x) {
            if (x * slots < left) break;
            cur.push_back(x);
            self(self, left - x, slots - 1, x);
            cur.pop_back();
        }
    };
    rec(rec, n, k, n);
    return out;
}

namespace {

Sorou power_map(const Sorou& s, std::int64_t k) {
    std::vector<Root> roots;
    for (const auto& r : s.roots()) roots.push_back(make_root(r.order, r.power * k));
    return Sorou(roots);
}

Sorou galois_class_key(const Sorou& s) {
    const std::int64_t n = order(s);
    Sorou best = canonicalize(s);
    for (std::int64_t k = 2; k < n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        Sorou c = canonicalize(power_map(s, k));
        if (c < best) best = std::move(c);
    }
    return best;
}

}  // namespace

std::vector<Sorou> candidate_f0s(int w, std::int64_t p, const GenerationConfig& cfg) {
    if (w < 1) return {};
    if (w == 1) return {Sorou{kOne}};
    const std::int64_t q = nt::primorial_below(p);
    const std::int64_t lo = cfg.allow_repeated_f0_terms ? 0 : 1;
    std::set<Sorou> seen;
    std::vector<std::int64_t> e(static_cast<std::size_t>(w), 0);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t from) -> void {
        if (i == e.size()) {
            const Sorou f = from_exponents(e, q);
            if (has_vanishing_subsorou(f, true)) return;
            seen.insert(cfg.enable_conjugate_collapse ? galois_class_key(f) : canonicalize(f));
            return;
        }
        for (std::int64_t x = from; x < q; ++x) {
            e[i] = x;
            self(self, i + 1, cfg.allow_repeated_f0_terms ? x : x + 1);
        }
    };
    rec(rec, 1, lo);
    return {seen.begin(), seen.end()};
}

std::vector<MinVanType> galois_orbit(const MinVanType& t) {
    const std::int64_t l = f0_order_lcm(single(t));
    std::vector<MinVanType> out;
    std::set<std::string> seen;
    for (std::int64_t k = 1; k < std::max<std::int64_t>(l, 2); ++k) {
        if (std::gcd(k, l) != 1) continue;
        MinVanType g = galois_type(t, k);
        if (seen.insert(render_type(g)).second) out.push_back(std::move(g));
    }
    return out;
}

std::vector<TypeSum> typesum_pool(int total, std::int64_t p, int max_components, const std::vector<MinVanType>& types) {
    std::vector<MinVanType> usable;
    for (const auto& t : types)
        if (t.p < p && type_weight(t) <= total) usable.push_back(t);
    std::sort(usable.begin(), usable.end(), [](const MinVanType& a, const MinVanType& b) { return compare_types(a, b) > 0; });
    std::vector<TypeSum> out;
    std::vector<MinVanType> cur;
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
        if (left == 0) {
            out.push_back(TypeSum{cur});
            return;
        }
        if (static_cast<int>(cur.size()) == max_components) return;
        for (std::size_t i = from; i < usable.size(); ++i) {
            const int w = type_weight(usable[i]);
            if (w > left) continue;
            cur.push_back(usable[i]);
            self(self, i, left - w);
            cur.pop_back();
        }
    };
    rec(rec, 0, total);
    return out;
}

namespace {

std::vector<MinVanType> expanded_types(const TypeDatabase& db) {
    std::vector<MinVanType> out;
    for (const auto& t : minimal_types(db)) {
        if (db.collapse) {
            for (auto& g : galois_orbit(t)) out.push_back(std::move(g));
        } else {
            out.push_back(t);
        }
    }
    return out;
}

/// Multisets of size c drawn from pool, as nondecreasing index vectors.
void for_each_multiset(std::size_t pool, std::size_t c, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(c, 0);
    if (pool == 0) return;
    while (true) {
        fn(idx);
        std::size_t i = c;
        while (i > 0 && idx[i - 1] + 1 == pool) --i;
        if (i == 0) return;
        const std::size_t v = idx[i - 1] + 1;
        for (std::size_t j = i - 1; j < c; ++j) idx[j] = v;
    }
}

}  // namespace

std::vector<TypeSum> typesum_pool(int total, std::int64_t p, int max_components, const TypeDatabase& db) {
    return typesum_pool(total, p, max_components, expanded_types(db));
}

std::vector<MinVanType> candidate_types(const TypeDatabase& db, const GenerationConfig& cfg) {
    const int target = cfg.target_weight;
    if (target < 2) throw Error("target weight must be at least 2");
    if (db.max_complete_weight != target - 1)
        throw Error("incomplete db: complete through weight " + std::to_string(db.max_complete_weight) +
                    ", cannot generate weight " + std::to_string(target));
    const auto known = expanded_types(db);
    std::map<std::tuple<int, std::int64_t, int>, std::vector<TypeSum>> pools;
    auto pool = [&](int total, std::int64_t p, int maxc) -> const std::vector<TypeSum>& {
        auto key = std::make_tuple(total, p, maxc);
        auto it = pools.find(key);
        if (it == pools.end()) it = pools.emplace(key, typesum_pool(total, p, maxc, known)).first;
        return it->second;
    };

    std::vector<MinVanType> out;
    std::set<std::string> seen;
    for (auto p : nt::primes_up_to(target)) {
        if (p == target) out.push_back(rp(p));
        for (const auto& partition : partitions_into_parts(target, static_cast<int>(p))) {
            if (partition.front() == 1) continue;
            const int w0 = partition.back();
            // Slot 0 holds f0; the other p - 1 parts are grouped by weight.
            std::map<int, std::size_t, std::greater<>> groups;
            for (std::size_t i = 0; i + 1 < partition.size(); ++i) ++groups[partition[i]];
            for (const auto& f0 : candidate_f0s(w0, p, cfg)) {
                std::vector<const std::vector<TypeSum>*> group_pools;
                std::vector<std::size_t> group_sizes;
                bool empty = false;
                for (const auto& [part, count] : groups) {
                    group_pools.push_back(&pool(part + w0, p, w0));
                    group_sizes.push_back(count);
                    empty |= group_pools.back()->empty();
                }
                if (empty) continue;
                std::vector<TypeSum> chosen;
                auto rec = [&](auto&& self, std::size_t g) -> void {
                    if (g == group_pools.size()) {
                        std::vector<TypeSum> subs;
                        for (const auto& s : chosen)
                            if (!is_pure_r2_sum(s)) subs.push_back(s);
                        if (subs.empty() || static_cast<std::int64_t>(subs.size()) > p - 1) return;
                        if (cfg.enable_minvan_subtype_filter && std::none_of(subs.begin(), subs.end(), is_minimal)) return;
                        MinVanType t = make_minvan(p, f0, std::move(subs));
                        if (seen.insert(render_type(t)).second) out.push_back(std::move(t));
                        return;
                    }
                    for_each_multiset(group_pools[g]->size(), group_sizes[g], [&](const std::vector<std::size_t>& idx) {
                        for (auto i : idx) chosen.push_back((*group_pools[g])[i]);
                        self(self, g + 1);
                        chosen.resize(chosen.size() - idx.size());
                    });
                };
                rec(rec, 0);
            }
        }
    }
    return out;
}

std::vector<MinVanType> generate_next_weight(const TypeDatabase& db, const GenerationConfig& cfg) {
    EnumerationCache cache;
    return generate_next_weight(db, cfg, cache);
}

std::vector<MinVanType> generate_next_weight(const TypeDatabase& db, const GenerationConfig& cfg, EnumerationCache& cache) {
    std::vector<MinVanType> candidates = candidate_types(db, cfg);
    if (cfg.enable_conjugate_collapse) {
        std::set<std::string> seen;
        std::vector<MinVanType> reduced;
        for (auto& t : candidates) {
            MinVanType c = galois_canonical(t);
            if (seen.insert(render_type(c)).second) reduced.push_back(std::move(c));
        }
        candidates = std::move(reduced);
    }
    // A single assembly can fail where another placement of the subtypes
    // succeeds, so a candidate is kept iff any assembly is minimal.
    std::vector<char> keep(candidates.size(), 0);
    parallel_for(candidates.size(), cfg.threads, [&](std::size_t i) {
        if (type_weight(candidates[i]) != cfg.target_weight) return;
        keep[i] = !minimal_sorou_of_type(candidates[i], cache).empty();
    });
    std::vector<MinVanType> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (keep[i]) out.push_back(std::move(candidates[i]));
    std::sort(out.begin(), out.end(), TypeLess{});
    return out;
}

std::vector<MinVanType> types_2pq_oracle(std::int64_t p, std::int64_t q, int weight_cap) {
    std::vector<MinVanType> out;
    for (std::int64_t r : {std::int64_t{2}, p, q})
        if (r <= weight_cap) out.push_back(rp(r));
    std::set<std::string> seen;
    const std::int64_t half = (p - 1) / 2;
    // Subsets I of {1, ..., p-1}, with 0 added, as bitmasks.
    for (std::int64_t mask = 0; mask < (std::int64_t{1} << (p - 1)); ++mask) {
        std::vector<Root> f0{kOne};
        for (std::int64_t i = 1; i < p; ++i)
            if (mask >> (i - 1) & 1) f0.push_back(make_root(p, i));
        const auto size = static_cast<std::int64_t>(f0.size());
        if (size > half) continue;
        for (std::int64_t j = 1; j < q; ++j) {
            const MinVanType t = make_minvan(q, Sorou(f0), std::vector<TypeSum>(static_cast<std::size_t>(j), single(rp(p))));
            if (type_weight(t) > weight_cap) continue;
            Sorou rep;
            try {
                rep = representative_sorou(t);
            } catch (const Error&) {
                continue;
            }
            if (!is_minimal_vanishing(rep).minimal) continue;
            const MinVanType c = galois_canonical(t);
            if (seen.insert(render_type(c)).second) out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end(), TypeLess{});
    return out;
}

}  // namespace minvan
