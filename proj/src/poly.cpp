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

#include "rrcode/poly.hpp"

#include <cassert>

#include "rrcode/errors.hpp"

namespace rrcode {

Poly::Poly(Field k, std::vector<FieldElement> coeffs)
    : field_(std::move(k)), coeffs_(std::move(coeffs)) {
    prune();
}

void Poly::prune() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const Field& k, const FieldElement& c) { return Poly(k, {c}); }

Poly Poly::from_ints(const Field& k, const std::vector<int64_t>& coeffs) {
    std::vector<FieldElement> out;
    out.reserve(coeffs.size());
    for (int64_t c : coeffs) out.push_back(k.from_int(c));
    return Poly(k, std::move(out));
}

Poly Poly::monomial(const Field& k, int degree, const FieldElement& c) {
    std::vector<FieldElement> out(degree + 1, k.zero());
    out[degree] = c;
    return Poly(k, std::move(out));
}

Poly Poly::x_minus(const Field& k, const FieldElement& a) {
    return Poly(k, {k.neg(a), k.one()});
}

bool Poly::is_one() const { return degree() == 0 && coeffs_[0] == field_.one(); }

FieldElement Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return field_.zero();
    return coeffs_[i];
}

FieldElement Poly::leading() const {
    if (is_zero()) fail("ZeroPolynomial", "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

bool Poly::is_monic() const { return !is_zero() && leading() == field_.one(); }

Poly Poly::operator+(const Poly& rhs) const {
    assert(field_ == rhs.field_);
    std::vector<FieldElement> out(std::max(coeffs_.size(), rhs.coeffs_.size()), field_.zero());
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = field_.add(coeff(static_cast<int>(i)), rhs.coeff(static_cast<int>(i)));
    return Poly(field_, std::move(out));
}

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly Poly::operator-() const {
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(field_.neg(c));
    return Poly(field_, std::move(out));
}

Poly Poly::operator*(const Poly& rhs) const {
    assert(field_ == rhs.field_);
    if (is_zero() || rhs.is_zero()) return Poly(field_);
    std::vector<FieldElement> out(coeffs_.size() + rhs.coeffs_.size() - 1, field_.zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] = field_.add(out[i + j], field_.mul(coeffs_[i], rhs.coeffs_[j]));
    }
    return Poly(field_, std::move(out));
}

Poly Poly::scaled(const FieldElement& c) const {
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size());
    for (const auto& e : coeffs_) out.push_back(field_.mul(e, c));
    return Poly(field_, std::move(out));
}

FieldElement Poly::eval(const FieldElement& a) const {
    FieldElement acc = field_.zero();
    for (int i = degree(); i >= 0; --i) acc = field_.add(field_.mul(acc, a), coeffs_[i]);
    return acc;
}

Poly Poly::derivative() const {
    if (degree() < 1) return Poly(field_);
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size() - 1);
    for (int i = 1; i <= degree(); ++i)
        out.push_back(field_.mul(field_.from_int(i), coeffs_[i]));
    return Poly(field_, std::move(out));
}

Poly Poly::shifted(const FieldElement& c) const {
    // Horner in (x + c): result = (...(c_d * (x+c) + c_{d-1}) * (x+c) + ...)
    Poly xc(field_, {c, field_.one()});
    Poly acc(field_);
    for (int i = degree(); i >= 0; --i)
        acc = acc * xc + Poly::constant(field_, coeffs_[i]);
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) fail("ZeroPolynomial", "cannot normalize the zero polynomial");
    return scaled(field_.inv(leading()));
}

int Poly::ord_at(const FieldElement& a) const {
    if (is_zero()) fail("ZeroPolynomial", "order of the zero polynomial is undefined");
    Poly cur = *this;
    Poly lin = Poly::x_minus(field_, a);
    int ord = 0;
    while (cur.eval(a).is_zero()) {
        auto [quot, rem] = divrem(cur, lin);
        assert(rem.is_zero());
        cur = std::move(quot);
        ++ord;
    }
    return ord;
}

Poly Poly::pow(int e) const {
    assert(e >= 0);
    Poly acc = Poly::constant(field_, field_.one());
    Poly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Poly Poly::truncated(int n) const {
    if (n <= 0) return Poly(field_);
    std::vector<FieldElement> out(coeffs_.begin(),
                                  coeffs_.begin() + std::min<size_t>(coeffs_.size(), n));
    return Poly(field_, std::move(out));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    const Field& k = field_;
    for (int i = 0; i <= degree(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        bool unit = coeffs_[i] == k.one();
        if (i == 0) {
            out += k.str(coeffs_[i]);
        } else {
            if (!unit) out += k.str(coeffs_[i]) + "*";
            out += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail("DivisionByZero", "polynomial division by zero");
    const Field& k = a.field();
    if (a.degree() < b.degree()) return {Poly(k), a};
    FieldElement lead_inv = k.inv(b.leading());
    std::vector<FieldElement> rem(a.coeffs());
    std::vector<FieldElement> quot(a.degree() - b.degree() + 1, k.zero());
    for (int i = a.degree(); i >= b.degree(); --i) {
        FieldElement c = k.mul(rem[i], lead_inv);
        if (c.is_zero()) continue;
        quot[i - b.degree()] = c;
        for (int j = 0; j <= b.degree(); ++j)
            rem[i - b.degree() + j] = k.sub(rem[i - b.degree() + j], k.mul(c, b.coeff(j)));
    }
    return {Poly(k, std::move(quot)), Poly(k, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) fail("ZeroPolynomial", "gcd(0, 0) is undefined");
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly rem = r0 % r1;
        r0 = std::move(r1);
        r1 = std::move(rem);
    }
    return r0.monic();
}

FieldElement resultant(const Poly& a, const Poly& b) {
    const Field& k = a.field();
    if (a.is_zero() || b.is_zero()) return k.zero();
    FieldElement acc = k.one();
    FieldElement minus_one = k.neg(k.one());
    Poly r0 = a, r1 = b;
    for (;;) {
        if (r1.degree() == 0) return k.mul(acc, k.pow(r1.leading(), r0.degree()));
        if (r0.degree() < r1.degree()) {
            acc = k.mul(acc, k.pow(minus_one, static_cast<int64_t>(r0.degree()) * r1.degree()));
            std::swap(r0, r1);
            continue;
        }
        Poly rem = r0 % r1;
        if (rem.is_zero()) return k.zero();
        acc = k.mul(acc, k.pow(minus_one, static_cast<int64_t>(r0.degree()) * r1.degree()));
        acc = k.mul(acc, k.pow(r1.leading(), r0.degree() - rem.degree()));
        r0 = std::move(r1);
        r1 = std::move(rem);
    }
}

int ord_or_inf(const Poly& a, const FieldElement& at) {
    return a.is_zero() ? kOrdInf : a.ord_at(at);
}

}  // namespace rrcode
