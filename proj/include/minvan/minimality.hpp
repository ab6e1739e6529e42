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

#ifndef MINVAN_MINIMALITY_HPP
#define MINVAN_MINIMALITY_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "minvan/sorou.hpp"

namespace minvan {

enum class FailingCondition { ValueZeroF0, InnerVanishingSubsorou, CommonSubvalue, NotVanishing };

/// "value-zero-f0", "inner-vanishing-subsorou", "common-subvalue", "not-vanishing".
std::string_view tag(FailingCondition c);

struct MinimalityVerdict {
    bool vanishing = false;
    bool minimal = false;
    std::optional<FailingCondition> failing_condition;
};

/// Largest prime factor of the relative order, which must be squarefree and > 1.
std::int64_t top_prime(const Sorou& s);

/// Minimality via the subsidiary decomposition at the top prime.
MinimalityVerdict is_minimal_vanishing(const Sorou& s);

/// Definition-level check: vanishing, and no proper nonempty subsorou vanishes.
bool is_minimal_vanishing_bruteforce(const Sorou& s);

/// True if some nonempty subsorou vanishes (s itself included when include_self).
bool has_vanishing_subsorou(const Sorou& s, bool include_self);

/// Repeatedly removes a smallest-weight vanishing subsorou (ties broken by
/// rendered text) until nothing is left.
std::vector<Sorou> decompose_into_minimal(const Sorou& s);

}  // namespace minvan

#endif
