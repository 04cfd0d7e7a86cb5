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

#include <map>
#include <string>
#include <vector>

#include "rrcode/curve.hpp"
#include "rrcode/poly.hpp"

namespace rrcode {

/// Function-field element F = (A(x) + B(x) y) / C(x) on a hyperelliptic
/// curve. Canonical form: gcd(gcd(A, B), C) = 1 and C monic; the zero
/// element is (0 + 0 y)/1. Since [K(H) : K(x)] = 2 this representation is
/// closed under the arithmetic below.
class FuncElem {
   public:
    /// Canonicalizes. Throws DivisionByZero when c is the zero polynomial.
    FuncElem(Poly a, Poly b, Poly c);

    static FuncElem zero(const Field& k);
    static FuncElem one(const Field& k);
    static FuncElem x(const Field& k);
    static FuncElem y(const Field& k);
    static FuncElem from_poly(Poly a);

    const Poly& num_a() const noexcept { return a_; }
    const Poly& num_b() const noexcept { return b_; }
    const Poly& den() const noexcept { return c_; }
    const Field& field() const noexcept { return a_.field(); }
    bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }

    friend bool operator==(const FuncElem& f, const FuncElem& g) {
        return f.a_ == g.a_ && f.b_ == g.b_ && f.c_ == g.c_;
    }
    friend bool operator!=(const FuncElem& f, const FuncElem& g) { return !(f == g); }

    /// "(A + B*y)/C" with the Poly rendering; "0" for zero, denominator
    /// omitted when C = 1.
    std::string str() const;

   private:
    Poly a_, b_, c_;
};

/// Divisor with finite support: point -> nonzero integer multiplicity.
class Divisor {
   public:
    Divisor() = default;
    /// Accumulates; entries that reach multiplicity 0 are erased.
    void add(const Point& p, int mult);
    int mult_at(const Point& p) const;
    bool contains(const Point& p) const { return entries_.count(p) != 0; }
    int degree() const;
    const std::map<Point, int>& entries() const noexcept { return entries_; }

    friend bool operator==(const Divisor& a, const Divisor& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const Divisor& a, const Divisor& b) { return !(a == b); }

   private:
    std::map<Point, int> entries_;
};

/// A ratio of polynomials in x alone, canonical (coprime, monic denominator).
struct RationalX {
    Poly num, den;
};

FuncElem ff_add(const Curve& curve, const FuncElem& f, const FuncElem& g);
FuncElem ff_sub(const Curve& curve, const FuncElem& f, const FuncElem& g);
FuncElem ff_neg(const Curve& curve, const FuncElem& f);
/// Uses the curve relation y^2 = f - h y.
FuncElem ff_mul(const Curve& curve, const FuncElem& f, const FuncElem& g);
/// conj(F) substitutes y -> -y - h (the hyperelliptic involution on functions).
FuncElem ff_conj(const Curve& curve, const FuncElem& f);
/// norm(F) = F * conj(F) = (A^2 - A B h - B^2 f) / C^2, a rational function in x.
RationalX ff_norm(const Curve& curve, const FuncElem& f);
/// inv(F) = conj(F) / norm(F). Throws DivisionByZero.
FuncElem ff_inv(const Curve& curve, const FuncElem& f);

/// Value of F at an affine point with no pole there. A vanishing denominator
/// is resolved through the local data of the valuation algorithm.
/// Throws PoleAtPoint, NotOnCurve, NotAffine, SingularEvaluation.
FieldElement ff_eval(const Curve& curve, const FuncElem& f, const Point& p);

/// Exact valuation v_P(F) for nonzero F; P affine or infinity.
///
/// At infinity: v = min(-2 deg A, -2 deg B - (2g+1)) + 2 deg C; the two
/// candidates have distinct parity, so the minimum is exact.
/// At a ramification point (a, b): v(x - a) = 2 and v(y - b) = 1, giving
/// v(numerator) = min(2 ord_a(A + B b), 2 ord_a(B) + 1), again parity-exact.
/// At a non-ramification point the conjugate trick applies: after factoring
/// the common (x - a)-power out of A and B, F and conj(F) cannot both vanish
/// at P, so either v = 0 there or v = ord_a of the reduced norm numerator.
/// At an involution-fixed point of a waived-singular curve (where the local
/// ring is not a valuation ring) the value returned is the total valuation
/// over the places above the point: ord_a(norm numerator) - 2 ord_a(C).
/// Throws ZeroFunction, NotOnCurve.
int valuation(const Curve& curve, const FuncElem& f, const Point& p);

/// True iff every root of the denominator (over the algebraic closure) has
/// an abscissa in `allowed`: divides out (x - a)^max for each allowed a and
/// tests that the quotient is constant. No factorization involved.
bool denominator_support_check(const FuncElem& f, const std::vector<FieldElement>& allowed);

}  // namespace rrcode
