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

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace rrcode {

/// Element of GF(p^t): digit vector of length t, low-to-high coefficients of
/// the residue polynomial, every digit in [0, p). Prime-field elements are a
/// single digit. Elements carry no field handle; all arithmetic goes through
/// the owning Field.
class FieldElement {
   public:
    FieldElement() = default;
    explicit FieldElement(std::vector<int64_t> digits) : digits_(std::move(digits)) {}

    const std::vector<int64_t>& digits() const noexcept { return digits_; }
    bool is_zero() const noexcept;

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.digits_ == b.digits_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
    /// Canonical total order: the integer value sum digits[i]*p^i, i.e.
    /// lexicographic on the reversed digit vector. Used for all deterministic
    /// tie-breaking (pivoting, point enumeration, kappa selection).
    friend bool operator<(const FieldElement& a, const FieldElement& b);

   private:
    std::vector<int64_t> digits_;
};

/// Immutable GF(p^t) context. Cheap to copy (shared handle); all operations
/// are pure, so a Field may be shared freely across threads.
class Field {
   public:
    /// Builds GF(p^t). For t > 1 a monic irreducible modulus of degree t over
    /// GF(p) must be supplied (t+1 coefficients, low-to-high). Extension
    /// degrees up to t = 6 are supported.
    /// Throws NotPrime, BadModulus.
    static Field make(int64_t p, int t, const std::vector<int64_t>& modulus = {});

    int64_t p() const noexcept;
    int t() const noexcept;
    uint64_t q() const noexcept;
    const std::vector<int64_t>& modulus() const noexcept;  // empty for prime fields

    FieldElement zero() const;
    FieldElement one() const;
    /// v mod p embedded in the prime subfield.
    FieldElement from_int(int64_t v) const;
    /// Digits reduced mod p and padded to length t. Rejects more than t digits.
    FieldElement element(std::vector<int64_t> digits) const;
    FieldElement from_index(uint64_t index) const;
    uint64_t index_of(const FieldElement& a) const;

    bool is_zero(const FieldElement& a) const { return a.is_zero(); }
    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    /// Multiplicative inverse via extended Euclid on residue polynomials.
    /// Throws DivisionByZero.
    FieldElement inv(const FieldElement& a) const;
    FieldElement div(const FieldElement& a, const FieldElement& b) const;
    /// a^e; negative exponents invert first. pow(0, 0) = 1.
    FieldElement pow(const FieldElement& a, int64_t e) const;

    /// All q elements in canonical order, starting at 0.
    std::vector<FieldElement> enumerate() const;

    /// Prime field: decimal integer. Extension field: "[d0,d1,...]".
    std::string str(const FieldElement& a) const;
    /// Accepts the rendering grammar above; a plain integer is also accepted
    /// for extension fields and embeds via from_int. Throws BadElement.
    FieldElement parse(std::string_view text) const;

    friend bool operator==(const Field& a, const Field& b);
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

   private:
    struct Impl;
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

}  // namespace rrcode
