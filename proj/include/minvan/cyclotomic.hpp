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

#ifndef MINVAN_CYCLOTOMIC_HPP
#define MINVAN_CYCLOTOMIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "minvan/sorou.hpp"

namespace minvan {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial over Z, lowest degree first. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
class IntPolynomial {
   public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);

    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    BigInt coefficient(int k) const { return (k >= 0 && k <= degree()) ? coeffs_[static_cast<std::size_t>(k)] : BigInt(0); }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Exact quotient by a monic divisor; throws if the remainder is nonzero.
    IntPolynomial divide_exact(const IntPolynomial& monic) const;

   private:
    std::vector<BigInt> coeffs_;
};

/// x^n - 1.
IntPolynomial x_pow_minus_one(std::int64_t n);

/// The n-th cyclotomic polynomial, memoized process-wide. The reference stays
/// valid for the lifetime of the program.
const IntPolynomial& cyclotomic_poly(std::int64_t n);

/// Value of a sorou as its remainder modulo Phi_N, N = modulus_order.
struct Residue {
    std::int64_t modulus_order = 1;
    std::vector<std::int64_t> coefficients;

    bool is_zero() const noexcept;
    friend bool operator==(const Residue&, const Residue&) = default;
    friend Residue operator+(const Residue& a, const Residue& b);
    friend Residue operator-(const Residue& a, const Residue& b);
};

struct ResidueHash {
    std::size_t operator()(const Residue& r) const noexcept;
};

/// Rows x^e mod Phi_n for 0 <= e < n, shared between threads.
class ReductionTable {
   public:
    /// nullptr when n * phi(n) is too large to tabulate.
    static std::shared_ptr<const ReductionTable> get(std::int64_t n);

    std::int64_t modulus() const noexcept { return n_; }
    std::int64_t degree() const noexcept { return phi_; }
    std::span<const std::int64_t> row(std::int64_t e) const {
        return {rows_.data() + static_cast<std::size_t>(e * phi_), static_cast<std::size_t>(phi_)};
    }
    void accumulate(std::span<std::int64_t> acc, std::int64_t e, std::int64_t count) const {
        const auto r = row(e);
        for (std::size_t k = 0; k < r.size(); ++k) acc[k] += count * r[k];
    }

    explicit ReductionTable(std::int64_t n);

   private:
    std::int64_t n_;
    std::int64_t phi_;
    std::vector<std::int64_t> rows_;
};

/// Residue at N = order(s).
Residue residue(const Sorou& s);
/// Residue at a modulus N that is a multiple of order(s).
Residue residue_at(const Sorou& s, std::int64_t n);

/// Exact vanishing test. Throws on the empty sorou.
bool is_vanishing(const Sorou& s);
bool values_equal(const Sorou& a, const Sorou& b);

/// Floating-point value; only ever used as a prefilter.
std::complex<double> numeric_value(const Sorou& s);

/// |value| above this proves the value is nonzero for any weight <= 10^6.
inline constexpr double kNumericNonzero = 1e-6;

}  // namespace minvan

#endif
