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

#ifndef MINVAN_NUMTHEORY_HPP
#define MINVAN_NUMTHEORY_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace minvan {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

namespace nt {

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Distinct prime factors, ascending.
inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline bool is_squarefree(std::int64_t n) {
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) return false;
    return true;
}

inline std::int64_t euler_phi(std::int64_t n) {
    std::int64_t result = n;
    for (auto p : prime_factors(n)) result = result / p * (p - 1);
    return result;
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t k = 2; k <= n; ++k)
        if (is_prime(k)) out.push_back(k);
    return out;
}

/// Product of all primes strictly below p (1 for p <= 2).
inline std::int64_t primorial_below(std::int64_t p) {
    std::int64_t q = 1;
    for (std::int64_t k = 2; k < p; ++k)
        if (is_prime(k)) q *= k;
    return q;
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    if (m == 1) return 0;
    std::int64_t old_r = mod(a, m), r = m, old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw Error("mod_inverse: " + std::to_string(a) + " not invertible mod " + std::to_string(m));
    return mod(old_s, m);
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace nt
}  // namespace minvan

#endif
