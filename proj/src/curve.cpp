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

#include "rrcode/curve.hpp"

#include <cassert>

#include "rrcode/errors.hpp"

namespace rrcode {

const FieldElement& Point::x() const {
    if (infinity_) fail("NotAffine", "point at infinity has no affine coordinates");
    return x_;
}

const FieldElement& Point::y() const {
    if (infinity_) fail("NotAffine", "point at infinity has no affine coordinates");
    return y_;
}

bool operator<(const Point& a, const Point& b) {
    if (a.infinity_ != b.infinity_) return !a.infinity_;
    if (a.infinity_) return false;
    if (a.x_ != b.x_) return a.x_ < b.x_;
    return a.y_ < b.y_;
}

Curve Curve::make(Field k, Poly f, Poly h, bool singular_ok) {
    if (f.degree() < 3 || f.degree() % 2 == 0)
        fail("BadDegree", "f must have odd degree >= 3, got degree " +
                              std::to_string(f.degree()));
    int genus = (f.degree() - 1) / 2;
    if (h.degree() > genus)
        fail("BadDegree", "deg h must be at most the genus " + std::to_string(genus));
    if (k.p() != 2 && !h.is_zero())
        fail("NonzeroHOddChar", "h must be zero in odd characteristic");

    // Smoothness certificate. Odd p: the affine model is smooth iff
    // Res(f, f') != 0. Characteristic 2: iff h != 0 and h shares no root with
    // f'^2 + f h'^2 (common root <=> both partials vanish at a curve point).
    bool smooth;
    if (k.p() != 2) {
        smooth = !resultant(f, f.derivative()).is_zero();
    } else {
        Poly fd = f.derivative();
        Poly hd = h.derivative();
        Poly crit = fd * fd + f * hd * hd;
        smooth = !h.is_zero() && !resultant(h, crit).is_zero();
    }
    if (!smooth && !singular_ok)
        fail("SingularCurve", "nonsingularity certificate failed; pass singular_ok to waive");
    return Curve(std::move(k), std::move(f), std::move(h), genus, !smooth);
}

bool Curve::on_curve(const Point& p) const {
    if (p.is_infinity()) return true;
    const FieldElement& a = p.x();
    const FieldElement& b = p.y();
    FieldElement lhs = field_.add(field_.mul(b, b), field_.mul(h_.eval(a), b));
    return lhs == f_.eval(a);
}

void Curve::require_on_curve(const Point& p) const {
    if (!on_curve(p))
        fail("NotOnCurve", "point (" + field_.str(p.x()) + "," + field_.str(p.y()) +
                               ") does not satisfy the curve equation");
}

Point Curve::opposite(const Point& p) const {
    const FieldElement& a = p.x();
    return Point::affine(a, field_.sub(field_.neg(p.y()), h_.eval(a)));
}

bool Curve::is_ramification(const Point& p) const {
    const FieldElement& b = p.y();
    return field_.add(field_.add(b, b), h_.eval(p.x())).is_zero();
}

std::vector<Point> Curve::rational_points() const {
    std::vector<Point> out;
    std::vector<FieldElement> elems = field_.enumerate();
    for (const auto& a : elems) {
        FieldElement fa = f_.eval(a);
        FieldElement ha = h_.eval(a);
        for (const auto& b : elems) {
            FieldElement lhs = field_.add(field_.mul(b, b), field_.mul(ha, b));
            if (lhs == fa) out.push_back(Point::affine(a, b));
        }
    }
    out.push_back(Point::infinity());
    return out;
}

CurveFit fit_curve(const Field& k, const FieldElement& shift, int e_lo, int e_hi,
                   const std::vector<std::pair<FieldElement, FieldElement>>& samples) {
    if (e_lo < 0 || e_lo > e_hi) fail("BadFit", "exponent range must satisfy 0 <= e_lo <= e_hi");
    size_t n = static_cast<size_t>(e_hi - e_lo + 1);
    if (samples.size() != n)
        fail("BadFit", "need exactly " + std::to_string(n) + " samples, got " +
                           std::to_string(samples.size()));
    for (size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].first == shift)
            fail("SingularSystem", "sample abscissa equals the shift point");
        for (size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].first == samples[j].first)
                fail("SingularSystem", "repeated sample abscissa " + k.str(samples[i].first));
    }

    Matrix vand(k, n, n);
    std::vector<FieldElement> rhs;
    rhs.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        FieldElement base = k.sub(samples[i].first, shift);
        for (int e = e_lo; e <= e_hi; ++e)
            vand.at(i, static_cast<size_t>(e - e_lo)) = k.pow(base, e);
        rhs.push_back(k.mul(samples[i].second, samples[i].second));
    }

    LinSolve sol = linsolve(vand, rhs);
    assert(sol.particular && sol.nullspace.empty());  // distinct nonzero abscissas
    std::optional<Matrix> vinv = inverse(vand);
    assert(vinv);

    std::vector<FieldElement> in_powers(static_cast<size_t>(e_hi) + 1, k.zero());
    for (size_t i = 0; i < n; ++i) in_powers[static_cast<size_t>(e_lo) + i] = (*sol.particular)[i];
    Poly shifted_poly(k, std::move(in_powers));
    Poly plain = shifted_poly.shifted(k.neg(shift));  // substitute x -> x - c

    return CurveFit{std::move(*sol.particular), std::move(plain), std::move(vand),
                    std::move(*vinv)};
}

}  // namespace rrcode
