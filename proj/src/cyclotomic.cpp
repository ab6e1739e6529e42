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

#include "minvan/cyclotomic.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace minvan {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& monic) const {
    if (monic.is_zero() || monic.coeffs_.back() != 1) throw Error("divide_exact: divisor must be monic");
    if (is_zero()) return {};
    const int dd = monic.degree();
    if (degree() < dd) throw Error("divide_exact: inexact division");
    std::vector<BigInt> rem(coeffs_);
    std::vector<BigInt> quot(static_cast<std::size_t>(degree() - dd + 1));
    for (int k = degree(); k >= dd; --k) {
        const BigInt c = rem[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        quot[static_cast<std::size_t>(k - dd)] = c;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= c * monic.coeffs_[static_cast<std::size_t>(j)];
    }
    for (int k = 0; k < dd; ++k)
        if (rem[static_cast<std::size_t>(k)] != 0) throw Error("divide_exact: inexact division");
    return IntPolynomial(std::move(quot));
}

IntPolynomial x_pow_minus_one(std::int64_t n) {
    std::vector<BigInt> c(static_cast<std::size_t>(n + 1));
    c.front() = -1;
    c.back() = 1;
    return IntPolynomial(std::move(c));
}

namespace {

std::shared_mutex g_phi_mutex;
std::map<std::int64_t, std::unique_ptr<IntPolynomial>> g_phi;

}  // namespace

const IntPolynomial& cyclotomic_poly(std::int64_t n) {
    if (n < 1) throw Error("cyclotomic_poly: n must be positive");
    {
        std::shared_lock lock(g_phi_mutex);
        if (auto it = g_phi.find(n); it != g_phi.end()) return *it->second;
    }
    IntPolynomial value = x_pow_minus_one(n);
    for (auto d : nt::divisors(n))
        if (d < n) value = value.divide_exact(cyclotomic_poly(d));
    std::unique_lock lock(g_phi_mutex);
    auto [it, inserted] = g_phi.try_emplace(n, nullptr);
    if (inserted) it->second = std::make_unique<IntPolynomial>(std::move(value));
    return *it->second;
}

bool Residue::is_zero() const noexcept {
    for (auto c : coefficients)
        if (c != 0) return false;
    return true;
}

Residue operator+(const Residue& a, const Residue& b) {
    if (a.modulus_order != b.modulus_order) throw Error("residue moduli differ");
    Residue out = a;
    for (std::size_t k = 0; k < out.coefficients.size(); ++k) out.coefficients[k] += b.coefficients[k];
    return out;
}

Residue operator-(const Residue& a, const Residue& b) {
    if (a.modulus_order != b.modulus_order) throw Error("residue moduli differ");
    Residue out = a;
    for (std::size_t k = 0; k < out.coefficients.size(); ++k) out.coefficients[k] -= b.coefficients[k];
    return out;
}

std::size_t ResidueHash::operator()(const Residue& r) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(r.modulus_order);
    for (auto c : r.coefficients) h ^= std::hash<std::int64_t>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

namespace {

constexpr std::int64_t kMaxTableEntries = std::int64_t{1} << 22;

std::vector<std::int64_t> phi_as_int64(std::int64_t n) {
    const auto& poly = cyclotomic_poly(n);
    std::vector<std::int64_t> out;
    out.reserve(poly.coefficients().size());
    for (const auto& c : poly.coefficients()) {
        if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min())
            throw Error("cyclotomic coefficient exceeds 64 bits for n = " + std::to_string(n));
        out.push_back(static_cast<std::int64_t>(c));
    }
    return out;
}

std::shared_mutex g_table_mutex;
std::map<std::int64_t, std::shared_ptr<const ReductionTable>> g_tables;

}  // namespace

ReductionTable::ReductionTable(std::int64_t n) : n_(n), phi_(nt::euler_phi(n)) {
    const auto phi_coeffs = phi_as_int64(n);
    rows_.assign(static_cast<std::size_t>(n_ * phi_), 0);
    for (std::int64_t e = 0; e < n_; ++e) {
        std::int64_t* cur = rows_.data() + e * phi_;
        if (e < phi_) {
            cur[e] = 1;
            continue;
        }
        const std::int64_t* prev = cur - phi_;
        const std::int64_t top = prev[phi_ - 1];
        cur[0] = 0;
        for (std::int64_t k = 1; k < phi_; ++k) cur[k] = prev[k - 1];
        if (top != 0)
            for (std::int64_t k = 0; k < phi_; ++k) cur[k] -= top * phi_coeffs[static_cast<std::size_t>(k)];
    }
}

std::shared_ptr<const ReductionTable> ReductionTable::get(std::int64_t n) {
    {
        std::shared_lock lock(g_table_mutex);
        if (auto it = g_tables.find(n); it != g_tables.end()) return it->second;
    }
    std::shared_ptr<const ReductionTable> table;
    if (n * nt::euler_phi(n) <= kMaxTableEntries) table = std::make_shared<const ReductionTable>(n);
    std::unique_lock lock(g_table_mutex);
    return g_tables.try_emplace(n, std::move(table)).first->second;
}

namespace {

/// Long division of sum count * x^e by Phi_n, without a table.
Residue reduce_directly(const Sorou& s, std::int64_t n) {
    const auto phi = phi_as_int64(n);
    const std::int64_t deg = static_cast<std::int64_t>(phi.size()) - 1;
    std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
    for (const auto& t : s.terms()) v[static_cast<std::size_t>(t.root.power * (n / t.root.order))] += t.count;
    for (std::int64_t k = n - 1; k >= deg; --k) {
        const std::int64_t c = v[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        for (std::int64_t j = 0; j <= deg; ++j) v[static_cast<std::size_t>(k - deg + j)] -= c * phi[static_cast<std::size_t>(j)];
    }
    v.resize(static_cast<std::size_t>(deg));
    return {n, std::move(v)};
}

}  // namespace

Residue residue_at(const Sorou& s, std::int64_t n) {
    if (n < 1) throw Error("residue_at: modulus must be positive");
    for (const auto& t : s.terms())
        if (n % t.root.order != 0) throw Error("residue_at: modulus is not a multiple of the order");
    const auto table = ReductionTable::get(n);
    if (!table) return reduce_directly(s, n);
    Residue out{n, std::vector<std::int64_t>(static_cast<std::size_t>(table->degree()), 0)};
    for (const auto& t : s.terms()) table->accumulate(out.coefficients, t.root.power * (n / t.root.order), t.count);
    return out;
}

Residue residue(const Sorou& s) { return residue_at(s, s.empty() ? 1 : order(s)); }

std::complex<double> numeric_value(const Sorou& s) {
    std::complex<double> z{0.0, 0.0};
    for (const auto& t : s.terms()) z += static_cast<double>(t.count) * to_complex(t.root);
    return z;
}

bool is_vanishing(const Sorou& s) {
    if (s.empty()) throw Error("empty sorou");
    if (std::abs(numeric_value(s)) > kNumericNonzero) return false;
    // The value of a rotation is a unit multiple of the value, so testing the
    // anchored form keeps the modulus equal to the relative order.
    return residue(anchor(s)).is_zero();
}

bool values_equal(const Sorou& a, const Sorou& b) {
    if (a.empty() || b.empty()) throw Error("empty sorou");
    return is_vanishing(minus(a, b));
}

}  // namespace minvan
