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

#include <utility>
#include <vector>

#include "rrcode/linalg.hpp"
#include "rrcode/poly.hpp"

namespace rrcode {

/// A rational point of the curve: affine (x, y) or the single point at
/// infinity of the odd-degree model.
class Point {
   public:
    static Point affine(FieldElement x, FieldElement y) { return Point(false, std::move(x), std::move(y)); }
    static Point infinity() { return Point(true, FieldElement(), FieldElement()); }

    bool is_infinity() const noexcept { return infinity_; }
    const FieldElement& x() const;
    const FieldElement& y() const;

    friend bool operator==(const Point& a, const Point& b) {
        if (a.infinity_ || b.infinity_) return a.infinity_ == b.infinity_;
        return a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    /// Affine points in (x, then y) canonical order; infinity sorts last.
    friend bool operator<(const Point& a, const Point& b);

   private:
    Point(bool inf, FieldElement x, FieldElement y)
        : infinity_(inf), x_(std::move(x)), y_(std::move(y)) {}
    bool infinity_;
    FieldElement x_, y_;
};

/// Imaginary hyperelliptic curve y^2 + h(x) y = f(x) with deg f = 2g+1 odd
/// and one rational point at infinity. For odd characteristic h must be zero;
/// in characteristic 2 a nonzero h is required for nonsingularity.
class Curve {
   public:
    /// Validates degrees and evaluates the nonsingularity certificate
    /// (resultant-based, no point search). A failing certificate throws
    /// SingularCurve unless singular_ok is set, in which case the curve is
    /// created with the waiver recorded.
    /// Throws BadDegree, NonzeroHOddChar, SingularCurve.
    static Curve make(Field k, Poly f, Poly h, bool singular_ok = false);

    const Field& field() const noexcept { return field_; }
    const Poly& f() const noexcept { return f_; }
    const Poly& h() const noexcept { return h_; }
    int genus() const noexcept { return genus_; }
    /// True when the nonsingularity certificate failed and was waived.
    bool singular_waived() const noexcept { return singular_waived_; }

    /// b^2 + h(a) b = f(a); true for the point at infinity.
    bool on_curve(const Point& p) const;
    /// Throws NotOnCurve.
    void require_on_curve(const Point& p) const;
    /// Hyperelliptic involution (a, b) -> (a, -b - h(a)). Affine points only.
    Point opposite(const Point& p) const;
    /// Fixed point of the involution: 2b + h(a) = 0. Affine points only.
    bool is_ramification(const Point& p) const;

    /// All affine GF(q)-rational points in (x, then y) canonical order,
    /// followed by the point at infinity.
    std::vector<Point> rational_points() const;

   private:
    Curve(Field k, Poly f, Poly h, int genus, bool waived)
        : field_(std::move(k)), f_(std::move(f)), h_(std::move(h)), genus_(genus),
          singular_waived_(waived) {}
    Field field_;
    Poly f_, h_;
    int genus_;
    bool singular_waived_;
};

struct CurveFit {
    /// Coefficients a_k of sum a_k (x - c)^k for k in [e_lo, e_hi].
    std::vector<FieldElement> shifted_coeffs;
    /// The same polynomial expanded in plain coordinates.
    Poly plain;
    Matrix vandermonde;
    Matrix vandermonde_inverse;
};

/// Fits y^2 = sum_{k=e_lo}^{e_hi} a_k (x - c)^k through the samples (x_i, y_i)
/// by solving the Vandermonde system V a = (y_i^2), V = ((x_i - c)^k).
/// Requires exactly e_hi - e_lo + 1 samples with pairwise distinct x_i != c.
/// Throws SingularSystem, BadFit.
CurveFit fit_curve(const Field& k, const FieldElement& shift, int e_lo, int e_hi,
                   const std::vector<std::pair<FieldElement, FieldElement>>& samples);

}  // namespace rrcode
