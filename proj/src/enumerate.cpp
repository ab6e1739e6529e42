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

#include "minvan/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "minvan/minimality.hpp"
#include "minvan/parallel.hpp"

namespace minvan {

EnumerationCache::EnumerationCache(const SorouCache& initial) {
    for (const auto& [key, list] : initial) {
        std::promise<std::vector<Sorou>> p;
        p.set_value(list);
        entries_.emplace(key, p.get_future().share());
    }
}

std::vector<Sorou> EnumerationCache::get_or_compute(const std::string& key, const std::function<std::vector<Sorou>()>& compute) {
    std::shared_ptr<std::promise<std::vector<Sorou>>> mine;
    std::shared_future<std::vector<Sorou>> fut;
    {
        std::lock_guard lock(mutex_);
        auto it = entries_.find(key);
        if (it != entries_.end()) {
            fut = it->second;
        } else {
            mine = std::make_shared<std::promise<std::vector<Sorou>>>();
            fut = mine->get_future().share();
            entries_.emplace(key, fut);
        }
    }
    if (mine) {
        try {
            mine->set_value(compute());
        } catch (...) {
            {
                std::lock_guard lock(mutex_);
                entries_.erase(key);
            }
            mine->set_exception(std::current_exception());
        }
    }
    return fut.get();
}

bool EnumerationCache::contains(const std::string& key) const {
    std::lock_guard lock(mutex_);
    return entries_.count(key) > 0;
}

SorouCache EnumerationCache::snapshot() const {
    std::lock_guard lock(mutex_);
    SorouCache out;
    for (const auto& [key, fut] : entries_) {
        if (key.find('#') != std::string::npos) continue;
        if (fut.wait_for(std::chrono::seconds(0)) != std::future_status::ready) continue;
        try {
            out.emplace(key, fut.get());
        } catch (...) {
        }
    }
    return out;
}

namespace {

const std::string kMinimalSuffix = "#minimal";

/// Rotations of v that contain part, from the candidates tau / omega.
void for_each_embedding(const Sorou& part, const Sorou& v, const std::function<void(const Sorou&)>& fn) {
    const Root tau = part.terms().front().root;
    std::set<Sorou> seen;
    for (const auto& t : v.terms()) {
        Sorou r = rotate(v, tau * inverse(t.root));
        if (is_subsorou(part, r) && seen.insert(r).second) fn(r);
    }
}

/// Distinct arrangements of labels over slots, as index sequences.
std::vector<std::vector<int>> unique_permutations(std::vector<int> labels) {
    std::sort(labels.begin(), labels.end());
    std::vector<std::vector<int>> out;
    do out.push_back(labels);
    while (std::next_permutation(labels.begin(), labels.end()));
    return out;
}

}  // namespace

std::vector<Sorou> minimal_sorou_of_type(const MinVanType& t, EnumerationCache& cache, const EnumerationOptions& opts) {
    const std::string key = render_type(t) + kMinimalSuffix;
    return cache.get_or_compute(key, [&] {
        std::vector<Sorou> out;
        for (const auto& s : sorou_of_minvan_type(t, cache, opts))
            if (is_minimal_vanishing(s).minimal) out.push_back(s);
        return out;
    });
}

std::vector<Sorou> sorou_of_typesum_anchored(const TypeSum& t, const Sorou& f0, EnumerationCache& cache) {
    const std::size_t m = t.components.size();
    const auto roots = f0.roots();
    if (m == 0 || m > roots.size()) return {};
    std::vector<std::vector<Sorou>> reps;
    for (const auto& c : t.components) reps.push_back(minimal_sorou_of_type(c, cache));

    std::set<Sorou> found;
    if (m == 1) {
        for (const auto& h : reps.front()) for_each_embedding(f0, h, [&](const Sorou& r) { found.insert(r); });
        return {found.begin(), found.end()};
    }
    std::vector<std::size_t> assign(roots.size(), 0);
    while (true) {
        std::vector<std::vector<Root>> parts(m);
        for (std::size_t i = 0; i < roots.size(); ++i) parts[assign[i]].push_back(roots[i]);
        if (std::all_of(parts.begin(), parts.end(), [](const auto& p) { return !p.empty(); })) {
            // Placements of each component covering its share.
            std::vector<std::vector<Sorou>> placed(m);
            for (std::size_t c = 0; c < m; ++c) {
                const Sorou part(parts[c]);
                std::set<Sorou> options;
                for (const auto& h : reps[c]) for_each_embedding(part, h, [&](const Sorou& r) { options.insert(r); });
                placed[c].assign(options.begin(), options.end());
            }
            std::vector<std::size_t> idx(m, 0);
            const bool any = std::all_of(placed.begin(), placed.end(), [](const auto& v) { return !v.empty(); });
            while (any) {
                Sorou total;
                for (std::size_t c = 0; c < m; ++c) total = total + placed[c][idx[c]];
                found.insert(total);
                std::size_t c = m;
                while (c > 0 && idx[c - 1] + 1 == placed[c - 1].size()) idx[--c] = 0;
                if (c == 0) break;
                ++idx[c - 1];
            }
        }
        std::size_t i = roots.size();
        while (i > 0 && assign[i - 1] + 1 == m) assign[--i] = 0;
        if (i == 0) break;
        ++assign[i - 1];
    }
    return {found.begin(), found.end()};
}

std::vector<Sorou> sorou_of_minvan_type(const MinVanType& t, EnumerationCache& cache, const EnumerationOptions& opts) {
    const std::string key = render_type(t) + (opts.anchor_first_subtype ? "" : "#unanchored");
    return cache.get_or_compute(key, [&] {
        const std::size_t p = static_cast<std::size_t>(t.p);
        const std::size_t n = t.subtypes.size();
        if (n == 0) return std::vector<Sorou>{canonicalize(from_subsidiary({t.p, std::vector<Sorou>(p, t.f0)}))};

        // Slot contents per distinct subtype: f0 - v for each anchored realization v.
        std::vector<int> label_of(n);
        std::vector<std::vector<Sorou>> slot_options;
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0 && t.subtypes[i] == t.subtypes[i - 1]) {
                label_of[i] = label_of[i - 1];
                continue;
            }
            label_of[i] = static_cast<int>(slot_options.size());
            std::vector<Sorou> opts_for;
            for (const auto& v : sorou_of_typesum_anchored(t.subtypes[i], t.f0, cache)) opts_for.push_back(subtract(t.f0, v));
            slot_options.push_back(std::move(opts_for));
        }
        for (const auto& o : slot_options)
            if (o.empty()) return std::vector<Sorou>{};

        // Label -1 marks a slot that keeps f0.
        std::vector<std::vector<int>> layouts;
        if (opts.anchor_first_subtype) {
            std::vector<int> rest(label_of.begin() + 1, label_of.end());
            rest.resize(p - 1, -1);
            for (auto& perm : unique_permutations(rest)) {
                perm.insert(perm.begin(), label_of.front());
                layouts.push_back(std::move(perm));
            }
        } else {
            std::vector<int> all(label_of.begin(), label_of.end());
            all.resize(p, -1);
            layouts = unique_permutations(all);
        }

        std::vector<std::set<Sorou>> found(layouts.size());
        parallel_for(layouts.size(), opts.threads, [&](std::size_t li) {
            const auto& layout = layouts[li];
            std::vector<std::size_t> filled;
            for (std::size_t s = 0; s < p; ++s)
                if (layout[s] >= 0) filled.push_back(s);
            std::vector<std::size_t> idx(filled.size(), 0);
            std::vector<Sorou> parts(p, t.f0);
            while (true) {
                for (std::size_t k = 0; k < filled.size(); ++k)
                    parts[filled[k]] = slot_options[static_cast<std::size_t>(layout[filled[k]])][idx[k]];
                found[li].insert(canonicalize(from_subsidiary({t.p, parts})));
                std::size_t k = filled.size();
                while (k > 0 && idx[k - 1] + 1 == slot_options[static_cast<std::size_t>(layout[filled[k - 1]])].size())
                    idx[--k] = 0;
                if (k == 0) break;
                ++idx[k - 1];
            }
        });
        std::set<Sorou> all;
        for (auto& f : found) all.merge(f);
        const int w = type_weight(t);
        std::vector<Sorou> out;
        for (const auto& s : all)
            if (s.weight() == w) out.push_back(s);
        return out;
    });
}

TypeRecord type_statistics(const MinVanType& t, EnumerationCache& cache, const EnumerationOptions& opts) {
    TypeRecord r = make_record(t);
    const auto realizations = minimal_sorou_of_type(t, cache, opts);
    if (realizations.empty()) throw Error("type has no minimal realization: " + render_type(t));
    for (const auto& s : realizations) {
        r.parities.insert(parity(s));
        r.heights.insert(s.height());
        r.relative_orders.insert(relative_order(s));
    }
    r.equisigned = std::any_of(r.parities.begin(), r.parities.end(), [](const Parity& p) { return p.larger == p.smaller; });
    r.has_statistics = true;
    return r;
}

}  // namespace minvan
