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

#ifndef MINVAN_ENUMERATE_HPP
#define MINVAN_ENUMERATE_HPP

#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "minvan/store.hpp"
#include "minvan/types.hpp"

namespace minvan {

struct EnumerationOptions {
    int threads = 1;
    /// Fix the first subtype at slot 0; the cyclic symmetry of the slots makes
    /// this lossless. Off enumerates every slot placement.
    bool anchor_first_subtype = true;
};

/// Thread-safe memo of rotation classes per rendered type. Each type is
/// enumerated at most once even under concurrent requests.
class EnumerationCache {
   public:
    EnumerationCache() = default;
    explicit EnumerationCache(const SorouCache& initial);

    /// Cached classes, or computes them with `compute` exactly once.
    std::vector<Sorou> get_or_compute(const std::string& key, const std::function<std::vector<Sorou>()>& compute);
    bool contains(const std::string& key) const;
    /// Finished full enumerations keyed by rendered type, for persistence.
    SorouCache snapshot() const;

   private:
    mutable std::mutex mutex_;
    std::map<std::string, std::shared_future<std::vector<Sorou>>> entries_;
};

/// Canonical representatives of every rotation class assembled for t; these
/// have weight type_weight(t) but are not all minimal.
std::vector<Sorou> sorou_of_minvan_type(const MinVanType& t, EnumerationCache& cache,
                                        const EnumerationOptions& opts = {});

/// Minimal members of sorou_of_minvan_type.
std::vector<Sorou> minimal_sorou_of_type(const MinVanType& t, EnumerationCache& cache,
                                         const EnumerationOptions& opts = {});

/// Sorou of type t containing f0, each minimal component covering a nonempty
/// share of the terms of f0; deduplicated by equality.
std::vector<Sorou> sorou_of_typesum_anchored(const TypeSum& t, const Sorou& f0, EnumerationCache& cache);

/// Parities, heights and relative orders over the minimal realizations.
TypeRecord type_statistics(const MinVanType& t, EnumerationCache& cache, const EnumerationOptions& opts = {});

}  // namespace minvan

#endif
