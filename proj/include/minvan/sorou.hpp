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

#ifndef MINVAN_SOROU_HPP
#define MINVAN_SOROU_HPP

#include <compare>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <span>
#include <utility>
#include <vector>

#include "minvan/numtheory.hpp"

namespace minvan {

/// The root of unity e^{2 pi i power / order}, always stored reduced:
/// gcd(order, power) = 1 and 0 <= power < order, with 1 stored as (1, 0).
struct Root {
    std::int64_t order = 1;
    std::int64_t power = 0;

    friend constexpr auto operator<=>(const Root&, const Root&) = default;
};

/// Reduces power mod order and divides out the gcd. Throws on order <= 0.
Root make_root(std::int64_t order, std::int64_t power);

inline constexpr Root kOne{1, 0};
inline constexpr Root kMinusOne{2, 1};

Root operator*(const Root& a, const Root& b);
Root inverse(const Root& r);
std::complex<double> to_complex(const Root& r);

/// A finite multiset of roots of unity, stored as sorted (root, multiplicity)
/// pairs. Comparison is lexicographic on the expanded sorted term list.
class Sorou {
   public:
    struct Term {
        Root root;
        int count = 0;
        friend constexpr bool operator==(const Term&, const Term&) = default;
    };

    Sorou() = default;
    Sorou(std::initializer_list<Root> roots) : Sorou(std::vector<Root>(roots)) {}
    explicit Sorou(std::vector<Root> roots);
    static Sorou from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t distinct() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    int weight() const noexcept { return weight_; }
    int height() const noexcept;
    int count(const Root& r) const noexcept;

    /// Expanded, sorted list of terms with repetition.
    std::vector<Root> roots() const;

    friend bool operator==(const Sorou& a, const Sorou& b) noexcept { return a.terms_ == b.terms_; }
    friend std::strong_ordering operator<=>(const Sorou& a, const Sorou& b) noexcept;

   private:
    std::vector<Term> terms_;
    int weight_ = 0;
};

/// Unordered parity pair, stored as (larger, smaller).
struct Parity {
    int larger = 0;
    int smaller = 0;
    friend constexpr auto operator<=>(const Parity&, const Parity&) = default;
};

/// h = sum_j nu_p^j f_j with every term of every f_j of order coprime to p.
struct SubsidiaryDecomposition {
    std::int64_t top_prime = 0;
    std::vector<Sorou> parts;
};

Sorou rotate(const Sorou& s, const Root& z);
/// Rotation by the inverse of the smallest term, so 1 is a term and the
/// order equals the relative order.
Sorou anchor(const Sorou& s);
Sorou concat(const Sorou& a, const Sorou& b);
inline Sorou operator+(const Sorou& a, const Sorou& b) { return concat(a, b); }
/// a + (-1) b with no cancellation.
Sorou minus(const Sorou& a, const Sorou& b);
/// a - b where terms common to both cancel with multiplicity.
Sorou subtract(const Sorou& a, const Sorou& b);
/// Sub-multiset test: g < h.
bool is_subsorou(const Sorou& g, const Sorou& h);
/// h with the terms of g removed; requires is_subsorou(g, h).
Sorou remove(const Sorou& h, const Sorou& g);

std::int64_t order(const Sorou& s);
std::int64_t relative_order(const Sorou& s);
Parity parity(const Sorou& s);

inline constexpr int kSubsetGuard = 24;

/// Calls fn once per proper nonempty sub-multiset.
void for_each_proper_subsorou(const Sorou& s, const std::function<void(const Sorou&)>& fn);
std::vector<Sorou> proper_nonempty_subsorous(const Sorou& s);

/// Exponent of each term (with repetition, in storage order) as a power of nu_n;
/// n must be a multiple of order(s).
std::vector<std::int64_t> exponents(const Sorou& s, std::int64_t n);
/// Inverse of exponents(): builds the sorou sum nu_n^e.
Sorou from_exponents(std::span<const std::int64_t> exps, std::int64_t n);

/// Lexicographic minimum over all term-anchored rotations.
Sorou canonicalize(const Sorou& s);
bool equivalent(const Sorou& a, const Sorou& b);

/// Splits r = nu_p^a * nu_m^b, where order(r) divides p*m with gcd(p, m) = 1.
std::pair<Root, Root> split_root(const Root& r, std::int64_t p);

SubsidiaryDecomposition to_subsidiary(const Sorou& s);
Sorou from_subsidiary(const SubsidiaryDecomposition& d);

class ParseError : public Error {
   public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

Sorou parse_sorou(std::string_view text);
std::string render_sorou(const Sorou& s);

}  // namespace minvan

#endif
