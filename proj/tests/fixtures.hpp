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

#ifndef MINVAN_TESTS_FIXTURES_HPP
#define MINVAN_TESTS_FIXTURES_HPP

#include <random>
#include <vector>

#include "minvan/sorou.hpp"

namespace fixtures {

using minvan::Root;
using minvan::Sorou;

inline Root nu(std::int64_t n, std::int64_t k = 1) { return minvan::make_root(n, k); }
inline Sorou neg(const Sorou& s) { return minvan::rotate(s, minvan::kMinusOne); }
inline Sorou R(std::int64_t p) {
    std::vector<Root> roots;
    for (std::int64_t k = 0; k < p; ++k) roots.push_back(nu(p, k));
    return Sorou(roots);
}

/// The height-2 weight-21 example with top prime 7.
inline Sorou weight21_h() {
    const Root n3 = nu(3), n5 = nu(5);
    const Sorou f = Sorou{minvan::kOne, n3 * nu(5, 4)};
    const Sorou f4 = neg(Sorou{n3, nu(5, 4)}) + minvan::rotate(Sorou{n5, nu(5, 2), nu(5, 3)}, nu(3, 2));
    const Sorou f6 = neg(Sorou{n5, nu(5, 2), nu(5, 3), nu(5, 4), nu(5, 4), nu(3, 2) * nu(5, 4)});
    minvan::SubsidiaryDecomposition d{7, {f, f, f, f, f4, f, f6}};
    return minvan::from_subsidiary(d);
}

/// nu_5 + nu_5^2 + nu_5^3 + nu_5^4 + nu_6 + nu_6^5.
inline Sorou r5_r3() { return Sorou{nu(5, 1), nu(5, 2), nu(5, 3), nu(5, 4), nu(6, 1), nu(6, 5)}; }

inline Sorou random_sorou(std::mt19937_64& rng, std::int64_t n, int max_weight) {
    std::uniform_int_distribution<int> w(1, max_weight);
    std::uniform_int_distribution<std::int64_t> e(0, n - 1);
    std::vector<Root> roots;
    const int weight = w(rng);
    for (int k = 0; k < weight; ++k) roots.push_back(nu(n, e(rng)));
    return Sorou(roots);
}

inline Root random_root(std::mt19937_64& rng, std::int64_t max_order = 60) {
    std::uniform_int_distribution<std::int64_t> o(1, max_order);
    const auto order = o(rng);
    std::uniform_int_distribution<std::int64_t> pw(0, order - 1);
    return nu(order, pw(rng));
}

}  // namespace fixtures

#endif
