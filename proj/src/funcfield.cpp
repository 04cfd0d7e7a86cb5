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

#include "rrcode/funcfield.hpp"

#include <algorithm>
#include <cassert>

#include "rrcode/errors.hpp"

namespace rrcode {

namespace {

// A^2 - A B h - B^2 f: the numerator of norm((A + B y)/C). Zero only when
// A + B y is the zero function, or when y^2 + h y - f is reducible (a
// degenerate input a waived singular curve can produce).
Poly norm_numerator(const Curve& curve, const Poly& a, const Poly& b) {
    return a * a - a * b * curve.h() - b * b * curve.f();
}

Poly divide_out(const Poly& p, const Poly& lin, int times) {
    Poly cur = p;
    for (int i = 0; i < times; ++i) {
        auto [quot, rem] = divrem(cur, lin);
        assert(rem.is_zero());
        cur = std::move(quot);
    }
    return cur;
}

}  // namespace

FuncElem::FuncElem(Poly a, Poly b, Poly c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    const Field& k = a_.field();
    if (c_.is_zero()) fail("DivisionByZero", "function-field element with zero denominator");
    if (a_.is_zero() && b_.is_zero()) {
        c_ = Poly::constant(k, k.one());
        return;
    }
    Poly g = a_.is_zero() ? gcd(b_, c_) : (b_.is_zero() ? gcd(a_, c_) : gcd(gcd(a_, b_), c_));
    if (g.degree() > 0) {
        a_ = a_ / g;
        b_ = b_ / g;
        c_ = c_ / g;
    }
    FieldElement scale = k.inv(c_.leading());
    a_ = a_.scaled(scale);
    b_ = b_.scaled(scale);
    c_ = c_.scaled(scale);
}

FuncElem FuncElem::zero(const Field& k) { return FuncElem(Poly(k), Poly(k), Poly::constant(k, k.one())); }
FuncElem FuncElem::one(const Field& k) { return from_poly(Poly::constant(k, k.one())); }
FuncElem FuncElem::x(const Field& k) { return from_poly(Poly::x(k)); }
FuncElem FuncElem::y(const Field& k) {
    return FuncElem(Poly(k), Poly::constant(k, k.one()), Poly::constant(k, k.one()));
}
FuncElem FuncElem::from_poly(Poly a) {
    const Field k = a.field();
    return FuncElem(std::move(a), Poly(k), Poly::constant(k, k.one()));
}

std::string FuncElem::str() const {
    if (is_zero()) return "0";
    const Field& k = field();
    std::string num;
    if (!a_.is_zero()) num = a_.str();
    if (!b_.is_zero()) {
        std::string ypart;
        if (b_.is_one())
            ypart = "y";
        else if (b_.degree() == 0)
            ypart = k.str(b_.coeff(0)) + "*y";
        else
            ypart = "(" + b_.str() + ")*y";
        num = num.empty() ? ypart : num + " + " + ypart;
    }
    if (c_.is_one()) return num;
    return "(" + num + ")/(" + c_.str() + ")";
}

void Divisor::add(const Point& p, int mult) {
    if (mult == 0) return;
    auto [it, inserted] = entries_.emplace(p, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) entries_.erase(it);
    }
}

int Divisor::mult_at(const Point& p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? 0 : it->second;
}

int Divisor::degree() const {
    int d = 0;
    for (const auto& [p, m] : entries_) d += m;
    return d;
}

FuncElem ff_add(const Curve& curve, const FuncElem& f, const FuncElem& g) {
    (void)curve;
    return FuncElem(f.num_a() * g.den() + g.num_a() * f.den(),
                    f.num_b() * g.den() + g.num_b() * f.den(), f.den() * g.den());
}

FuncElem ff_neg(const Curve& curve, const FuncElem& f) {
    (void)curve;
    return FuncElem(-f.num_a(), -f.num_b(), f.den());
}

FuncElem ff_sub(const Curve& curve, const FuncElem& f, const FuncElem& g) {
    return ff_add(curve, f, ff_neg(curve, g));
}

FuncElem ff_mul(const Curve& curve, const FuncElem& f, const FuncElem& g) {
    // (A1 + B1 y)(A2 + B2 y) with y^2 = f - h y
    const Poly& a1 = f.num_a();
    const Poly& b1 = f.num_b();
    const Poly& a2 = g.num_a();
    const Poly& b2 = g.num_b();
    Poly cross = b1 * b2;
    Poly a = a1 * a2 + cross * curve.f();
    Poly b = a1 * b2 + a2 * b1 - cross * curve.h();
    return FuncElem(std::move(a), std::move(b), f.den() * g.den());
}

FuncElem ff_conj(const Curve& curve, const FuncElem& f) {
    return FuncElem(f.num_a() - f.num_b() * curve.h(), -f.num_b(), f.den());
}

RationalX ff_norm(const Curve& curve, const FuncElem& f) {
    const Field& k = f.field();
    Poly num = norm_numerator(curve, f.num_a(), f.num_b());
    Poly den = f.den() * f.den();
    if (num.is_zero()) return RationalX{Poly(k), Poly::constant(k, k.one())};
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
        num = num / g;
        den = den / g;
    }
    FieldElement scale = k.inv(den.leading());
    return RationalX{num.scaled(scale), den.scaled(scale)};
}

FuncElem ff_inv(const Curve& curve, const FuncElem& f) {
    if (f.is_zero()) fail("DivisionByZero", "inverse of the zero function");
    Poly norm = norm_numerator(curve, f.num_a(), f.num_b());
    if (norm.is_zero())
        fail("ReducibleCurve", "y^2 + h y - f is reducible; the function ring is not a field");
    return FuncElem((f.num_a() - f.num_b() * curve.h()) * f.den(), -f.num_b() * f.den(),
                    std::move(norm));
}

int valuation(const Curve& curve, const FuncElem& f, const Point& p) {
    if (f.is_zero()) fail("ZeroFunction", "the zero function has no valuation");
    const Field& k = curve.field();
    const Poly& a = f.num_a();
    const Poly& b = f.num_b();
    const Poly& c = f.den();
    int genus = curve.genus();

    if (p.is_infinity()) {
        int v_num;
        if (a.is_zero())
            v_num = -2 * b.degree() - (2 * genus + 1);
        else if (b.is_zero())
            v_num = -2 * a.degree();
        else
            v_num = std::min(-2 * a.degree(), -2 * b.degree() - (2 * genus + 1));
        return v_num + 2 * c.degree();
    }

    curve.require_on_curve(p);
    const FieldElement& pa = p.x();
    const FieldElement& pb = p.y();

    if (curve.is_ramification(p)) {
        int c_ord = c.ord_at(pa);
        // ord of the branch polynomial b^2 + b h - f at a; 1 exactly when the
        // affine model is smooth here.
        Poly branch = Poly::constant(k, k.mul(pb, pb)) + curve.h().scaled(pb) - curve.f();
        assert(!branch.is_zero());
        if (branch.ord_at(pa) == 1) {
            // Genuine ramification place: minimum is exact by parity.
            Poly even_part = a + b.scaled(pb);
            int v_even = even_part.is_zero() ? kOrdInf : 2 * even_part.ord_at(pa);
            int v_odd = b.is_zero() ? kOrdInf : 2 * b.ord_at(pa) + 1;
            return std::min(v_even, v_odd) - 2 * c_ord;
        }
        // Waived-singular fixed point: total valuation over the places above
        // it, which the norm computes in one shot.
        Poly norm = norm_numerator(curve, a, b);
        if (norm.is_zero())
            fail("ReducibleCurve", "y^2 + h y - f is reducible; valuation undefined");
        return norm.ord_at(pa) - 2 * c_ord;
    }

    // Non-ramification point: strip the common (x - a)-power, then use the
    // conjugate trick on the reduced numerator.
    int shared = std::min(ord_or_inf(a, pa), ord_or_inf(b, pa));
    Poly lin = Poly::x_minus(k, pa);
    Poly ra = a.is_zero() ? a : divide_out(a, lin, shared);
    Poly rb = b.is_zero() ? b : divide_out(b, lin, shared);
    FieldElement value = k.add(ra.eval(pa), k.mul(rb.eval(pa), pb));
    int w = 0;
    if (value.is_zero()) {
        Poly norm = norm_numerator(curve, ra, rb);
        if (norm.is_zero())
            fail("ReducibleCurve", "y^2 + h y - f is reducible; valuation undefined");
        w = norm.ord_at(pa);
    }
    return shared + w - c.ord_at(pa);
}

FieldElement ff_eval(const Curve& curve, const FuncElem& f, const Point& p) {
    if (p.is_infinity()) fail("NotAffine", "evaluation requires an affine point");
    curve.require_on_curve(p);
    const Field& k = curve.field();
    if (f.is_zero()) return k.zero();
    const FieldElement& pa = p.x();
    const FieldElement& pb = p.y();

    FieldElement den_val = f.den().eval(pa);
    if (!den_val.is_zero()) {
        FieldElement num_val = k.add(f.num_a().eval(pa), k.mul(f.num_b().eval(pa), pb));
        return k.div(num_val, den_val);
    }

    int v = valuation(curve, f, p);
    if (v < 0) fail("PoleAtPoint", "function has a pole of order " + std::to_string(-v) +
                                       " at (" + k.str(pa) + "," + k.str(pb) + ")");
    if (v > 0) return k.zero();

    Poly lin = Poly::x_minus(k, pa);
    if (!curve.is_ramification(p)) {
        // v = 0 with C(a) = 0: cancel through the norm. With N~ the reduced
        // numerator, F = norm(N~) / ((x-a)^w C~ conj(N~)) where w = ord_a(norm).
        int shared = std::min(ord_or_inf(f.num_a(), pa), ord_or_inf(f.num_b(), pa));
        Poly ra = f.num_a().is_zero() ? f.num_a() : divide_out(f.num_a(), lin, shared);
        Poly rb = f.num_b().is_zero() ? f.num_b() : divide_out(f.num_b(), lin, shared);
        int c_ord = f.den().ord_at(pa);
        Poly cred = divide_out(f.den(), lin, c_ord);
        int w = c_ord - shared;
        Poly norm = norm_numerator(curve, ra, rb);
        Poly wpoly = divide_out(norm, lin, w);
        FieldElement conj_b = k.sub(k.neg(pb), curve.h().eval(pa));
        FieldElement conj_val = k.add(ra.eval(pa), k.mul(rb.eval(pa), conj_b));
        return k.div(wpoly.eval(pa), k.mul(cred.eval(pa), conj_val));
    }

    Poly branch = Poly::constant(k, k.mul(pb, pb)) + curve.h().scaled(pb) - curve.f();
    if (branch.ord_at(pa) != 1)
        fail("SingularEvaluation",
             "value at a singular point is branch-dependent and not defined");
    // Smooth ramification point with v = 0: the even part carries the value.
    Poly even_part = f.num_a() + f.num_b().scaled(pb);
    int alpha = even_part.ord_at(pa);
    assert(alpha == f.den().ord_at(pa));
    Poly num_red = divide_out(even_part, lin, alpha);
    Poly den_red = divide_out(f.den(), lin, alpha);
    return k.div(num_red.eval(pa), den_red.eval(pa));
}

bool denominator_support_check(const FuncElem& f, const std::vector<FieldElement>& allowed) {
    Poly c = f.den();
    const Field& k = c.field();
    for (const auto& a : allowed) {
        int ord = c.ord_at(a);
        if (ord > 0) c = divide_out(c, Poly::x_minus(k, a), ord);
    }
    return c.degree() == 0;
}

}  // namespace rrcode
