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

#ifndef MINVAN_TYPEGEN_HPP
#define MINVAN_TYPEGEN_HPP

#include <vector>

#include "minvan/enumerate.hpp"
#include "minvan/store.hpp"
#include "minvan/types.hpp"

namespace minvan {

struct GenerationConfig {
    int target_weight = 2;
    int threads = 1;
    bool enable_minvan_subtype_filter = true;
    bool enable_conjugate_collapse = true;
    bool allow_repeated_f0_terms = false;
};

/// Nonincreasing k-tuples of positive integers summing to n.
std::vector<std::vector<int>> partitions_into_parts(int n, int k);

/// Smallest subsidiary sorou candidates of weight w for top prime p: 1 plus
/// w - 1 further roots of order dividing the product of the primes below p,
/// with no vanishing subsorou, one per rotation (and Galois) class.
std::vector<Sorou> candidate_f0s(int w, std::int64_t p, const GenerationConfig& cfg);

/// All Galois images of t, deduplicated.
std::vector<MinVanType> galois_orbit(const MinVanType& t);

/// Sums of weight `total` of the given minimal types with top prime < p and
/// at most max_components components, one per multiset.
std::vector<TypeSum> typesum_pool(int total, std::int64_t p, int max_components, const std::vector<MinVanType>& types);
std::vector<TypeSum> typesum_pool(int total, std::int64_t p, int max_components, const TypeDatabase& db);

/// Candidate types of the target weight before the minimality check.
std::vector<MinVanType> candidate_types(const TypeDatabase& db, const GenerationConfig& cfg);

/// All minimal types of weight cfg.target_weight, sorted by compare_types.
std::vector<MinVanType> generate_next_weight(const TypeDatabase& db, const GenerationConfig& cfg);
std::vector<MinVanType> generate_next_weight(const TypeDatabase& db, const GenerationConfig& cfg, EnumerationCache& cache);

/// Closed-form list of minimal types of relative order dividing 2pq.
std::vector<MinVanType> types_2pq_oracle(std::int64_t p, std::int64_t q, int weight_cap);

}  // namespace minvan

#endif
