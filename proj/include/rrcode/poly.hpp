/*
   Copyright 2026 The rrcode authors

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

#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "rrcode/field.hpp"

namespace rrcode {

/// Sentinel for "order of vanishing of the zero polynomial". Kept well below
/// INT_MAX so sums with finite orders cannot overflow.
inline constexpr int kOrdInf = std::numeric_limits<int>::max() / 4;

/// Dense univariate polynomial over a Field. Coefficients are stored
/// low-to-high with no trailing zeros; the zero polynomial has an empty
/// coefficient vector and degree -1.
class Poly {
   public:
    explicit Poly(Field k) : field_(std::move(k)) {}
    Poly(Field k, std::vector<FieldElement> coeffs);

    static Poly constant(const Field& k, const FieldElement& c);
    static Poly from_ints(const Field& k, const std::vector<int64_t>& coeffs);
    /// c * x^degree
    static Poly monomial(const Field& k, int degree, const FieldElement& c);
    static Poly x(const Field& k) { return monomial(k, 1, k.one()); }
    /// x - a
    static Poly x_minus(const Field& k, const FieldElement& a);

    const Field& field() const noexcept { return field_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const;
    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of x^i; zero beyond the degree.
    FieldElement coeff(int i) const;
    FieldElement leading() const;
    bool is_monic() const;

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator-() const;
    Poly scaled(const FieldElement& c) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    FieldElement eval(const FieldElement& a) const;
    /// Formal derivative (characteristic-aware: i*c_i computed mod p).
    Poly derivative() const;
    /// Composition p(x + c).
    Poly shifted(const FieldElement& c) const;
    Poly monic() const;
    /// Multiplicity of the root a (0 when p(a) != 0). Throws ZeroPolynomial.
    int ord_at(const FieldElement& a) const;
    Poly pow(int e) const;
    /// Coefficients below x^n (series truncation).
    Poly truncated(int n) const;

    /// "c0 + c1*x + c2*x^2" with zero terms omitted; "0" for the zero polynomial.
    std::string str() const;

   private:
    void prune();
    Field field_;
    std::vector<FieldElement> coeffs_;
};

/// (quotient, remainder) with deg r < deg b and a = q*b + r. Throws DivisionByZero.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd; gcd(a, 0) = monic(a).
Poly gcd(const Poly& a, const Poly& b);
/// Resultant of a and b; zero iff they share a root in the algebraic closure
/// (or one of them is zero).
FieldElement resultant(const Poly& a, const Poly& b);
/// ord_at that treats the zero polynomial as vanishing to infinite order.
int ord_or_inf(const Poly& a, const FieldElement& at);

}  // namespace rrcode
