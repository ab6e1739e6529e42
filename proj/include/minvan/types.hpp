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

#ifndef MINVAN_TYPES_HPP
#define MINVAN_TYPES_HPP

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "minvan/sorou.hpp"

namespace minvan {

struct TypeSum;

/// (R_p : f0 : T_1, ..., T_n). Subtypes are kept non-increasing.
struct MinVanType {
    std::int64_t p = 2;
    Sorou f0{kOne};
    std::vector<TypeSum> subtypes;
};

/// T_1 + ... + T_k as a direct sum, components kept non-increasing.
struct TypeSum {
    std::vector<MinVanType> components;
};

bool operator==(const MinVanType& a, const MinVanType& b);
bool operator==(const TypeSum& a, const TypeSum& b);

/// A classified minimal type with statistics gathered from its realizations.
struct TypeRecord {
    TypeSum type;
    int weight = 0;
    std::int64_t top_prime = 0;
    std::vector<int> partition;
    std::set<std::int64_t> relative_orders;
    std::set<Parity> parities;
    std::set<int> heights;
    bool equisigned = false;
    bool has_statistics = false;

    friend bool operator==(const TypeRecord&, const TypeRecord&) = default;
};

/// Record with weight, top prime and partition filled in; no statistics.
TypeRecord make_record(const MinVanType& t);

/// Builds a type with f0 rotated to its canonical form and subtypes sorted.
MinVanType make_minvan(std::int64_t p, const Sorou& f0, std::vector<TypeSum> subtypes = {});
TypeSum make_sum(std::vector<MinVanType> components);
inline TypeSum single(MinVanType t) { return make_sum({std::move(t)}); }
/// The type R_p.
MinVanType rp(std::int64_t p);

int type_weight(const MinVanType& t);
int type_weight(const TypeSum& t);
/// Subsidiary weights, nondecreasing, length p.
std::vector<int> weight_partition(const MinVanType& t);
inline bool is_minimal(const TypeSum& t) { return t.components.size() == 1; }
/// True for a sum of R_2 components only.
bool is_pure_r2_sum(const TypeSum& t);

std::strong_ordering compare_types(const MinVanType& a, const MinVanType& b);
std::strong_ordering compare_types(const TypeSum& a, const TypeSum& b);

struct TypeLess {
    bool operator()(const TypeSum& a, const TypeSum& b) const { return compare_types(a, b) < 0; }
    bool operator()(const MinVanType& a, const MinVanType& b) const { return compare_types(a, b) < 0; }
};

/// Machine grammar: typesum := minvan ("&" minvan)*,
/// minvan := "(R" INT ";" SOROU (";" typesum)* ")".
std::string render_type(const TypeSum& t);
std::string render_type(const MinVanType& t);
TypeSum parse_type(std::string_view text);

/// Display form: f0 omitted when it is 1, repeated subtypes as 2R_3, sums with
/// \oplus. The separator goes between subtypes.
std::string render_type_latex(const TypeSum& t, std::string_view separator = ",");
std::string render_type_latex(const MinVanType& t, std::string_view separator = ",");
/// LaTeX for a single root, e.g. "\nu_{15}^{2}" or "-\nu_3".
std::string render_root_latex(const Root& r);
std::string render_sorou_latex(const Sorou& s);

/// Returns a description of the first violated structural invariant.
std::optional<std::string> check_invariants(const MinVanType& t);

/// A sorou of type t. For minimal types each subtype is rotated so that it
/// contains f0; the result need not be minimal.
Sorou representative_sorou(const MinVanType& t);
Sorou representative_sorou(const TypeSum& t);

/// One valid type of a minimal vanishing sorou.
TypeSum infer_type(const Sorou& s);

/// Applies nu -> nu^k to every f0 in the tree; k must be coprime to their orders.
TypeSum galois_type(const TypeSum& t, std::int64_t k);
MinVanType galois_type(const MinVanType& t, std::int64_t k);
/// Complex conjugation, i.e. k = -1.
TypeSum conjugate_type(const TypeSum& t);
/// lcm of the orders of all f0 in the tree.
std::int64_t f0_order_lcm(const TypeSum& t);
/// Least Galois image under compare_types; one representative per orbit.
TypeSum galois_canonical(const TypeSum& t);
MinVanType galois_canonical(const MinVanType& t);

}  // namespace minvan

#endif
