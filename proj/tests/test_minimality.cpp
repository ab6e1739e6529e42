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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "minvan/cyclotomic.hpp"
#include "minvan/minimality.hpp"

using namespace minvan;
using fixtures::neg;
using fixtures::nu;
using fixtures::R;

namespace {

// All multisets of weight w of n-th roots of unity that contain 1.
void for_each_anchored_multiset(std::int64_t n, int w, const std::function<void(const Sorou&)>& fn) {
    std::vector<std::int64_t> e(static_cast<std::size_t>(w), 0);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t lo) -> void {
        if (i == e.size()) {
            fn(from_exponents(e, n));
            return;
        }
        for (std::int64_t x = lo; x < n; ++x) {
            e[i] = x;
            self(self, i + 1, x);
        }
    };
    e[0] = 0;
    rec(rec, 1, 0);
}

}  // namespace

TEST_CASE("top prime") {
    CHECK(top_prime(Sorou{kOne, kMinusOne}) == 2);
    CHECK(top_prime(fixtures::r5_r3()) == 5);
    CHECK(top_prime(fixtures::weight21_h()) == 7);
    CHECK_THROWS_WITH_AS(top_prime(Sorou{kOne, kOne}), "no top prime", Error);
}

TEST_CASE("minimality verdicts") {
    auto v = is_minimal_vanishing(R(2));
    CHECK(v.vanishing);
    CHECK(v.minimal);
    CHECK_FALSE(v.failing_condition);

    v = is_minimal_vanishing(R(3) + R(3));
    CHECK(v.vanishing);
    CHECK_FALSE(v.minimal);

    v = is_minimal_vanishing(fixtures::weight21_h());
    CHECK(v.vanishing);
    CHECK(v.minimal);

    v = is_minimal_vanishing(Sorou{kOne, nu(3)});
    CHECK_FALSE(v.vanishing);
    CHECK(v.failing_condition == FailingCondition::NotVanishing);

    // R_2 rotated onto slots 0 and 1 of R_3's decomposition leaves f_0 = 0.
    v = is_minimal_vanishing(R(2) + rotate(R(2), nu(3)) + rotate(R(2), nu(3, 2)));
    CHECK(v.vanishing);
    CHECK_FALSE(v.minimal);

    // Non-squarefree relative order.
    v = is_minimal_vanishing(R(2) + rotate(R(2), nu(4)));
    CHECK(v.vanishing);
    CHECK(v.failing_condition == FailingCondition::InnerVanishingSubsorou);

    CHECK(is_minimal_vanishing(Sorou{kOne, kOne}).failing_condition == FailingCondition::NotVanishing);
    CHECK(tag(FailingCondition::CommonSubvalue) == "common-subvalue");
}

TEST_CASE("each failing condition is reachable") {
    // f_j all equal to 1 - 1: the slot value is 0.
    const Sorou z = R(2) + rotate(R(2), nu(3)) + rotate(R(2), nu(3, 2));
    CHECK(is_minimal_vanishing(z).failing_condition == FailingCondition::ValueZeroF0);
    // A slot picks up 1 + R_3, whose R_3 part vanishes on its own.
    const auto inner = is_minimal_vanishing(R(5) + rotate(R(3), nu(5)));
    CHECK(inner.vanishing);
    CHECK(inner.failing_condition == FailingCondition::InnerVanishingSubsorou);
    // Every slot is 1 + nu_3, and each has the subvalue 1.
    const auto common = is_minimal_vanishing(R(5) + rotate(R(5), nu(3)));
    CHECK(common.vanishing);
    CHECK(common.failing_condition == FailingCondition::CommonSubvalue);
}

TEST_CASE("brute force oracle") {
    CHECK(is_minimal_vanishing_bruteforce(R(5)));
    CHECK_FALSE(is_minimal_vanishing_bruteforce(R(2) + R(2)));
    CHECK(is_minimal_vanishing_bruteforce(fixtures::r5_r3()));
    CHECK_FALSE(is_minimal_vanishing_bruteforce(Sorou{kOne, nu(3)}));
}

TEST_CASE("criterion agrees with brute force on constructed sums") {
    std::mt19937_64 rng(17);
    const std::int64_t primes[] = {2, 3, 5, 7};
    int nonminimal = 0;
    for (int trial = 0; trial < 200; ++trial) {
        // R_p plus rotated R_q, occasionally with an extra overlapping rotation.
        const auto p = primes[rng() % 4];
        const auto q = primes[rng() % 4];
        const Root z = nu(210, static_cast<std::int64_t>(rng() % 210));
        Sorou s = rotate(R(p), nu(210, static_cast<std::int64_t>(rng() % 210))) + rotate(R(q), z);
        if (trial % 3 == 0) s = s + rotate(R(2), nu(210, static_cast<std::int64_t>(rng() % 210)));
        const bool brute = is_minimal_vanishing_bruteforce(s);
        const auto verdict = is_minimal_vanishing(s);
        CHECK(verdict.minimal == brute);
        CHECK(verdict.vanishing);
        nonminimal += !brute;
    }
    CHECK(nonminimal == 200);
}

TEST_CASE("criterion agrees with brute force on random small-order sorou") {
    for (std::int64_t n : {6, 10, 15, 30}) {
        for (int w = 2; w <= 6; ++w) {
            for_each_anchored_multiset(n, w, [&](const Sorou& s) {
                if (!is_vanishing(s)) {
                    CHECK_FALSE(is_minimal_vanishing(s).vanishing);
                    return;
                }
                const bool brute = is_minimal_vanishing_bruteforce(s);
                const auto v = is_minimal_vanishing(s);
                CHECK(v.vanishing);
                CHECK(v.minimal == brute);
                if (v.minimal) CHECK(nt::is_squarefree(relative_order(s)));
            });
        }
    }
}

TEST_CASE("minimal sorou of relative order dividing 2p are R_2 or R_p") {
    for (std::int64_t p : {3, 5, 7}) {
        for (int w = 2; w <= 7; ++w) {
            for_each_anchored_multiset(2 * p, w, [&](const Sorou& s) {
                if (!is_minimal_vanishing(s).minimal) return;
                CHECK((equivalent(s, R(2)) || equivalent(s, R(p))));
            });
        }
    }
}

TEST_CASE("has_vanishing_subsorou") {
    CHECK(has_vanishing_subsorou(Sorou{kOne, kMinusOne, nu(3)}, false));
    CHECK_FALSE(has_vanishing_subsorou(Sorou{kOne, kMinusOne}, false));
    CHECK(has_vanishing_subsorou(Sorou{kOne, kMinusOne}, true));
    CHECK_FALSE(has_vanishing_subsorou(Sorou{kOne, nu(5)}, true));
}

TEST_CASE("decompose into minimal parts") {
    const auto parts = decompose_into_minimal(R(3) + R(3));
    int total = 0;
    for (const auto& p : parts) {
        CHECK(is_minimal_vanishing(p).minimal);
        total += p.weight();
    }
    CHECK(total == 6);
    CHECK(decompose_into_minimal(R(7)) == std::vector<Sorou>{R(7)});
    CHECK(decompose_into_minimal(fixtures::weight21_h()).size() == 1);

    const Sorou s = R(2) + rotate(R(5), nu(3));
    const auto two = decompose_into_minimal(s);
    REQUIRE(two.size() == 2);
    CHECK(two[0].weight() == 2);
    CHECK(two[1].weight() == 5);
    CHECK_THROWS_AS(decompose_into_minimal(Sorou{kOne, nu(3)}), Error);
}

TEST_CASE("decomposition re-concatenates to the input") {
    std::mt19937_64 rng(3);
    const std::int64_t primes[] = {2, 3, 5};
    for (int trial = 0; trial < 60; ++trial) {
        Sorou s;
        for (int k = 0; k < 3; ++k)
            s = s + rotate(R(primes[rng() % 3]), nu(30, static_cast<std::int64_t>(rng() % 30)));
        const auto parts = decompose_into_minimal(s);
        Sorou back;
        for (const auto& p : parts) {
            CHECK(is_minimal_vanishing_bruteforce(p));
            back = back + p;
        }
        CHECK(back == s);
    }
}
