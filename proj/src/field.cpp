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

#include "rrcode/field.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <utility>

#include "rrcode/errors.hpp"

namespace rrcode {

namespace {

int64_t mod_pos(int64_t v, int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int64_t inv_mod(int64_t a, int64_t p) {
    a = mod_pos(a, p);
    if (a == 0) fail("DivisionByZero", "zero has no inverse in GF(" + std::to_string(p) + ")");
    int64_t r0 = a, r1 = p, s0 = 1, s1 = 0;
    while (r1 != 0) {
        int64_t quot = r0 / r1;
        r0 -= quot * r1;
        std::swap(r0, r1);
        s0 -= quot * s1;
        std::swap(s0, s1);
    }
    assert(r0 == 1);
    return mod_pos(s0, p);
}

// Minimal GF(p)[x] arithmetic on raw digit vectors (low-to-high). Used for
// extension-field reduction, inversion and modulus validation; the general
// Poly class sits on top of Field and cannot be used here.
using Digits = std::vector<int64_t>;

int vdeg(const Digits& v) {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
        if (v[i] != 0) return i;
    return -1;
}

Digits vmul(const Digits& a, const Digits& b, int64_t p) {
    if (vdeg(a) < 0 || vdeg(b) < 0) return {};
    Digits out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = mod_pos(out[i + j] + a[i] * b[j], p);
    }
    return out;
}

Digits vsub(Digits a, const Digits& b, int64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = mod_pos(a[i] - b[i], p);
    return a;
}

// quotient/remainder by b (b != 0). Remainder has deg < deg b.
std::pair<Digits, Digits> vdivmod(Digits a, const Digits& b, int64_t p) {
    int bd = vdeg(b);
    assert(bd >= 0);
    int64_t lead_inv = inv_mod(b[bd], p);
    int ad = vdeg(a);
    if (ad < bd) return {{}, std::move(a)};
    Digits quot(ad - bd + 1, 0);
    for (int i = ad; i >= bd; --i) {
        int64_t c = mod_pos(a[i] * lead_inv, p);
        if (c == 0) continue;
        quot[i - bd] = c;
        for (int j = 0; j <= bd; ++j) a[i - bd + j] = mod_pos(a[i - bd + j] - c * b[j], p);
    }
    a.resize(bd);
    return {std::move(quot), std::move(a)};
}

// inverse of a modulo m (m irreducible, a != 0 mod m): extended Euclid.
Digits vinv(const Digits& a, const Digits& m, int64_t p) {
    Digits r0 = a, r1 = m, s0 = {1}, s1 = {};
    while (vdeg(r1) >= 0) {
        auto [quot, rem] = vdivmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        Digits snext = vsub(s0, vmul(quot, s1, p), p);
        s0 = std::move(s1);
        s1 = std::move(snext);
    }
    assert(vdeg(r0) == 0);  // gcd is a unit since m is irreducible
    int64_t scale = inv_mod(r0[0], p);
    Digits out = s0;
    for (auto& d : out) d = mod_pos(d * scale, p);
    auto [q_unused, reduced] = vdivmod(std::move(out), m, p);
    (void)q_unused;
    return reduced;
}

int64_t veval(const Digits& v, int64_t x, int64_t p) {
    int64_t acc = 0;
    for (int i = vdeg(v); i >= 0; --i) acc = mod_pos(acc * x + v[i], p);
    return acc;
}

}  // namespace

struct Field::Impl {
    int64_t p = 0;
    int t = 1;
    std::vector<int64_t> modulus;  // length t+1 when t > 1, monic
    uint64_t q = 0;
};

bool FieldElement::is_zero() const noexcept {
    return std::all_of(digits_.begin(), digits_.end(), [](int64_t d) { return d == 0; });
}

bool operator<(const FieldElement& a, const FieldElement& b) {
    assert(a.digits_.size() == b.digits_.size());
    for (int i = static_cast<int>(a.digits_.size()) - 1; i >= 0; --i) {
        if (a.digits_[i] != b.digits_[i]) return a.digits_[i] < b.digits_[i];
    }
    return false;
}

bool operator==(const Field& a, const Field& b) {
    return a.impl_ == b.impl_ ||
           (a.impl_->p == b.impl_->p && a.impl_->t == b.impl_->t &&
            a.impl_->modulus == b.impl_->modulus);
}

Field Field::make(int64_t p, int t, const std::vector<int64_t>& modulus) {
    if (!is_prime(p)) fail("NotPrime", std::to_string(p) + " is not prime");
    if (t < 1) fail("BadModulus", "extension degree must be >= 1");
    if (t > 6) fail("BadModulus", "extension degrees above 6 are not supported");

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->t = t;

    if (t == 1) {
        if (!modulus.empty())
            fail("BadModulus", "prime field GF(" + std::to_string(p) + ") takes no modulus");
    } else {
        if (modulus.empty()) fail("BadModulus", "extension field requires a modulus");
        Digits m(modulus.size());
        for (size_t i = 0; i < modulus.size(); ++i) m[i] = mod_pos(modulus[i], p);
        if (vdeg(m) != t)
            fail("BadModulus", "modulus degree must equal the extension degree " +
                                   std::to_string(t));
        m.resize(t + 1);
        if (m[t] != 1) fail("BadModulus", "modulus must be monic");
        // No root in GF(p); irreducibility for t <= 3. Higher degrees also get
        // trial division by every monic factor of degree <= t/2.
        for (int64_t x = 0; x < p; ++x)
            if (veval(m, x, p) == 0)
                fail("BadModulus", "modulus has root " + std::to_string(x) + ", reducible");
        for (int d = 2; d <= t / 2; ++d) {
            double count = 1;
            for (int i = 0; i < d; ++i) count *= static_cast<double>(p);
            if (count > 4e6)
                fail("BadModulus", "modulus too large to certify irreducible");
            Digits trial(d + 1, 0);
            trial[d] = 1;
            uint64_t total = 1;
            for (int i = 0; i < d; ++i) total *= static_cast<uint64_t>(p);
            for (uint64_t idx = 0; idx < total; ++idx) {
                uint64_t v = idx;
                for (int i = 0; i < d; ++i) {
                    trial[i] = static_cast<int64_t>(v % static_cast<uint64_t>(p));
                    v /= static_cast<uint64_t>(p);
                }
                auto [q_unused, rem] = vdivmod(m, trial, p);
                (void)q_unused;
                if (vdeg(rem) < 0) fail("BadModulus", "modulus is reducible");
            }
        }
        impl->modulus = std::move(m);
    }

    uint64_t q = 1;
    for (int i = 0; i < t; ++i) {
        if (q > (uint64_t{1} << 62) / static_cast<uint64_t>(p))
            fail("BadModulus", "field too large");
        q *= static_cast<uint64_t>(p);
    }
    impl->q = q;
    return Field(std::move(impl));
}

int64_t Field::p() const noexcept { return impl_->p; }
int Field::t() const noexcept { return impl_->t; }
uint64_t Field::q() const noexcept { return impl_->q; }
const std::vector<int64_t>& Field::modulus() const noexcept { return impl_->modulus; }

FieldElement Field::zero() const { return FieldElement(std::vector<int64_t>(impl_->t, 0)); }

FieldElement Field::one() const {
    std::vector<int64_t> d(impl_->t, 0);
    d[0] = 1;
    return FieldElement(std::move(d));
}

FieldElement Field::from_int(int64_t v) const {
    std::vector<int64_t> d(impl_->t, 0);
    d[0] = mod_pos(v, impl_->p);
    return FieldElement(std::move(d));
}

FieldElement Field::element(std::vector<int64_t> digits) const {
    if (static_cast<int>(digits.size()) > impl_->t)
        fail("BadElement", "too many digits for GF(p^" + std::to_string(impl_->t) + ")");
    digits.resize(impl_->t, 0);
    for (auto& d : digits) d = mod_pos(d, impl_->p);
    return FieldElement(std::move(digits));
}

FieldElement Field::from_index(uint64_t index) const {
    std::vector<int64_t> d(impl_->t, 0);
    for (int i = 0; i < impl_->t; ++i) {
        d[i] = static_cast<int64_t>(index % static_cast<uint64_t>(impl_->p));
        index /= static_cast<uint64_t>(impl_->p);
    }
    return FieldElement(std::move(d));
}

uint64_t Field::index_of(const FieldElement& a) const {
    uint64_t idx = 0;
    for (int i = impl_->t - 1; i >= 0; --i)
        idx = idx * static_cast<uint64_t>(impl_->p) + static_cast<uint64_t>(a.digits()[i]);
    return idx;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
    std::vector<int64_t> d(impl_->t);
    for (int i = 0; i < impl_->t; ++i) d[i] = mod_pos(a.digits()[i] + b.digits()[i], impl_->p);
    return FieldElement(std::move(d));
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
    std::vector<int64_t> d(impl_->t);
    for (int i = 0; i < impl_->t; ++i) d[i] = mod_pos(a.digits()[i] - b.digits()[i], impl_->p);
    return FieldElement(std::move(d));
}

FieldElement Field::neg(const FieldElement& a) const {
    std::vector<int64_t> d(impl_->t);
    for (int i = 0; i < impl_->t; ++i) d[i] = mod_pos(-a.digits()[i], impl_->p);
    return FieldElement(std::move(d));
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
    if (impl_->t == 1)
        return FieldElement({mod_pos(a.digits()[0] * b.digits()[0], impl_->p)});
    Digits prod = vmul(a.digits(), b.digits(), impl_->p);
    auto [q_unused, rem] = vdivmod(std::move(prod), impl_->modulus, impl_->p);
    (void)q_unused;
    rem.resize(impl_->t, 0);
    return FieldElement(std::move(rem));
}

FieldElement Field::inv(const FieldElement& a) const {
    if (a.is_zero()) fail("DivisionByZero", "division by zero field element");
    if (impl_->t == 1) return FieldElement({inv_mod(a.digits()[0], impl_->p)});
    Digits out = vinv(a.digits(), impl_->modulus, impl_->p);
    out.resize(impl_->t, 0);
    return FieldElement(std::move(out));
}

FieldElement Field::div(const FieldElement& a, const FieldElement& b) const {
    return mul(a, inv(b));
}

FieldElement Field::pow(const FieldElement& a, int64_t e) const {
    if (e < 0) return pow(inv(a), -e);
    FieldElement base = a, acc = one();
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::vector<FieldElement> Field::enumerate() const {
    std::vector<FieldElement> out;
    out.reserve(impl_->q);
    for (uint64_t i = 0; i < impl_->q; ++i) out.push_back(from_index(i));
    return out;
}

std::string Field::str(const FieldElement& a) const {
    if (impl_->t == 1) return std::to_string(a.digits()[0]);
    std::string out = "[";
    for (int i = 0; i < impl_->t; ++i) {
        if (i) out += ",";
        out += std::to_string(a.digits()[i]);
    }
    out += "]";
    return out;
}

namespace {

int64_t parse_int64(std::string_view s) {
    if (s.empty()) fail("BadElement", "empty integer");
    size_t i = 0;
    bool negative = false;
    if (s[0] == '-' || s[0] == '+') {
        negative = (s[0] == '-');
        i = 1;
    }
    if (i == s.size()) fail("BadElement", "malformed integer '" + std::string(s) + "'");
    int64_t v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            fail("BadElement", "malformed integer '" + std::string(s) + "'");
        v = v * 10 + (s[i] - '0');
        if (v > (int64_t{1} << 60)) fail("BadElement", "integer out of range");
    }
    return negative ? -v : v;
}

}  // namespace

FieldElement Field::parse(std::string_view text) const {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (text.empty()) fail("BadElement", "empty field element");
    if (text.front() == '[') {
        if (text.back() != ']') fail("BadElement", "unterminated '[' in field element");
        std::string_view body = text.substr(1, text.size() - 2);
        std::vector<int64_t> digits;
        size_t start = 0;
        while (start <= body.size()) {
            size_t comma = body.find(',', start);
            std::string_view piece =
                comma == std::string_view::npos ? body.substr(start) : body.substr(start, comma - start);
            digits.push_back(parse_int64(piece));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        return element(std::move(digits));
    }
    return from_int(parse_int64(text));
}

}  // namespace rrcode
