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

#include "rrcode/rrbasis.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "rrcode/errors.hpp"
#include "rrcode/linalg.hpp"

namespace rrcode {

namespace {

int floor_div(int a, int b) {
    assert(b > 0);
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

// One linearized interpolation condition on the coefficients of k: the
// coefficient of u^i in k(u + a) equals rhs.
struct Condition {
    FieldElement a;
    int power = 0;  // i
    FieldElement rhs;
};

// Interpolation data grouped per abscissa.
struct TargetGroup {
    FieldElement a;
    FieldElement q;
    int mult = 0;
    bool ramification = false;
};

std::vector<TargetGroup> group_targets(const Curve& curve, const std::vector<KappaTarget>& targets) {
    if (targets.empty()) fail("NoInterpolant", "no interpolation targets");
    std::vector<TargetGroup> groups;
    for (const auto& t : targets) {
        if (t.q.is_infinity()) fail("BadDivisor", "interpolation target must be affine");
        if (t.mult < 1) fail("BadDivisor", "interpolation multiplicity must be >= 1");
        curve.require_on_curve(t.q);
        bool merged = false;
        for (auto& g : groups) {
            if (g.a != t.q.x()) continue;
            if (g.q != t.q.y())
                fail("NoInterpolant", "targets with equal abscissa but different ordinates");
            g.mult += t.mult;
            merged = true;
            break;
        }
        if (!merged)
            groups.push_back(TargetGroup{t.q.x(), t.q.y(), t.mult,
                                         curve.is_ramification(t.q)});
    }
    return groups;
}

std::vector<Condition> linearized_conditions(const Curve& curve,
                                             const std::vector<TargetGroup>& groups) {
    const Field& k = curve.field();
    std::vector<Condition> conds;
    for (const auto& g : groups) {
        if (!g.ramification) {
            Poly tau = branch_series(curve, g.a, g.q, g.mult);
            for (int i = 0; i < g.mult; ++i) conds.push_back({g.a, i, tau.coeff(i)});
            continue;
        }
        if (g.mult > 2)
            fail("UnsupportedMultiplicity",
                 "ramification targets support multiplicity at most 2");
        if (g.mult == 2) {
            // Any k through (a, q) meets the curve with order >= 2 here iff
            // f - q^2 - q h vanishes to order >= 2 at a.
            Poly resid = curve.f() - curve.h().scaled(g.q) -
                         Poly::constant(k, k.mul(g.q, g.q));
            if (ord_or_inf(resid, g.a) < 2)
                fail("NoInterpolant",
                     "double ramification point is not realizable on this curve");
        }
        conds.push_back({g.a, 0, g.q});
    }
    return conds;
}

// Rows of the condition matrix for unknown coefficients c_0..c_deg of k.
Matrix condition_matrix(const Field& k, const std::vector<Condition>& conds, int deg) {
    Matrix m(k, conds.size(), deg + 1);
    for (size_t r = 0; r < conds.size(); ++r) {
        // coeff of u^i in (u + a)^d, accumulated over columns d
        Poly shift_pow = Poly::constant(k, k.one());
        Poly lin(k, {conds[r].a, k.one()});
        for (int d = 0; d <= deg; ++d) {
            m.at(r, d) = shift_pow.coeff(conds[r].power);
            if (d < deg) shift_pow = shift_pow * lin;
        }
    }
    return m;
}

void validate_kappa(const Curve& curve, const std::vector<TargetGroup>& groups, const Poly& k,
                    int j) {
    int delta = std::max(k.degree(), 1);
    if (delta > j)
        fail("BadKappaOverride", "delta = " + std::to_string(delta) +
                                     " exceeds the number of divisor points " + std::to_string(j));
    const Field& fld = curve.field();
    Poly meet = k * k + k * curve.h() - curve.f();
    for (const auto& g : groups) {
        if (k.eval(g.a) != g.q)
            fail("BadKappaOverride", "kappa misses the point (" + fld.str(g.a) + "," +
                                         fld.str(g.q) + ")");
        if (ord_or_inf(meet, g.a) < g.mult)
            fail("BadKappaOverride", "kappa meets the curve with too low order at x = " +
                                         fld.str(g.a));
    }
}

}  // namespace

ReducedDivisor decompose_reduced(const Curve& curve, const Divisor& d) {
    ReducedDivisor out;
    for (const auto& [p, m] : d.entries()) {
        if (p.is_infinity()) {
            out.omega = m;
            continue;
        }
        if (m < 0) fail("BadDivisor", "divisor must be effective");
        curve.require_on_curve(p);
        out.affine.emplace_back(p, m);
        out.j += m;
    }
    if (out.omega < 0) fail("DegreeTooSmall", "negative multiplicity at infinity");
    out.n = out.j + out.omega;
    if (out.j > curve.genus())
        fail("BadDivisor", "reduced form requires at most genus = " +
                               std::to_string(curve.genus()) + " affine points, got " +
                               std::to_string(out.j));
    return out;
}

Poly branch_series(const Curve& curve, const FieldElement& a, const FieldElement& b, int prec) {
    const Field& k = curve.field();
    FieldElement unit = k.add(k.add(b, b), curve.h().eval(a));
    if (unit.is_zero())
        fail("NotHenselLiftable", "branch series requires a non-ramification point");
    curve.require_on_curve(Point::affine(a, b));
    assert(prec >= 1);

    Poly f_local = curve.f().shifted(a).truncated(prec);
    Poly h_local = curve.h().shifted(a).truncated(prec);
    FieldElement unit_inv = k.inv(unit);

    Poly tau = Poly::constant(k, b);
    for (int s = 1; s < prec; ++s) {
        Poly resid = (f_local - tau * tau - tau * h_local).truncated(s + 1);
        FieldElement e = resid.coeff(s);
        if (e.is_zero()) continue;
        tau = tau + Poly::monomial(k, s, k.mul(e, unit_inv));
    }
    assert((f_local - tau * tau - tau * h_local).truncated(prec).is_zero());
    return tau;
}

KappaCurve kappa_interpolate(const Curve& curve, const std::vector<KappaTarget>& targets,
                             const std::optional<Poly>& override_k) {
    const Field& k = curve.field();
    std::vector<TargetGroup> groups = group_targets(curve, targets);
    int j = 0;
    for (const auto& g : groups) j += g.mult;

    if (override_k) {
        validate_kappa(curve, groups, *override_k, j);
        return KappaCurve{*override_k, std::max(override_k->degree(), 1)};
    }

    std::vector<Condition> conds = linearized_conditions(curve, groups);
    // Minimal degree first; the particular solution of the reduced system has
    // all free coefficients zero, which is the canonical-order-smallest pick.
    for (int deg = 0; deg < static_cast<int>(conds.size()); ++deg) {
        Matrix m = condition_matrix(k, conds, deg);
        std::vector<FieldElement> rhs;
        rhs.reserve(conds.size());
        for (const auto& c : conds) rhs.push_back(c.rhs);
        LinSolve sol = linsolve(m, rhs);
        if (!sol.particular) continue;
        Poly kappa(k, std::move(*sol.particular));
        return KappaCurve{kappa, std::max(kappa.degree(), 1)};
    }
    fail("NoInterpolant", "interpolation conditions are inconsistent");
}

FuncElem psi_build(const Curve& curve, const Divisor& d, const std::optional<Poly>& kappa_override) {
    const Field& k = curve.field();
    ReducedDivisor rd = decompose_reduced(curve, d);
    if (rd.j == 0) return FuncElem::y(k);

    std::vector<KappaTarget> targets;
    targets.reserve(rd.affine.size());
    for (const auto& [p, m] : rd.affine) targets.push_back({curve.opposite(p), m});
    KappaCurve kappa = kappa_interpolate(curve, targets, kappa_override);

    Poly den = Poly::constant(k, k.one());
    for (const auto& [p, m] : rd.affine) den = den * Poly::x_minus(k, p.x()).pow(m);
    return FuncElem(-kappa.k, Poly::constant(k, k.one()), std::move(den));
}

RRBasis rr_basis(const Curve& curve, const Divisor& d, const std::optional<Poly>& kappa_override) {
    const Field& k = curve.field();
    ReducedDivisor rd = decompose_reduced(curve, d);
    int g = curve.genus();
    int nmj = rd.n - rd.j;

    RRBasis out;
    out.n = rd.n;
    out.j = rd.j;
    out.genus = g;
    out.with_psi = nmj >= 2 * (g - rd.j) + 1;

    int x_top = floor_div(nmj, 2);
    for (int h = 0; h <= x_top; ++h)
        out.elements.push_back(FuncElem::from_poly(Poly::monomial(k, h, k.one())));

    if (out.with_psi) {
        FuncElem psi = psi_build(curve, d, kappa_override);
        int psi_top = floor_div(nmj - 2 * (g - rd.j) - 1, 2);
        for (int e = 0; e <= psi_top; ++e)
            out.elements.push_back(
                ff_mul(curve, psi, FuncElem::from_poly(Poly::monomial(k, e, k.one()))));
        out.psi = std::move(psi);
    }
    return out;
}

int rr_dim(int genus, int j, int n) {
    if (genus < 1 || j < 0 || j > genus || n < j)
        fail("OutOfRange", "rr_dim requires 1 <= g, 0 <= j <= g, n >= j");
    if (n >= 2 * genus - j) return n - genus + 1;
    return floor_div(n - j, 2) + 1;
}

int dim_oracle(const Curve& curve, const Divisor& d, int precision_override) {
    if (curve.singular_waived())
        fail("SingularCurve", "dim_oracle requires a certified nonsingular curve");
    const Field& k = curve.field();
    ReducedDivisor rd = decompose_reduced(curve, d);
    int g = curve.genus();
    int nmj = rd.omega;

    // Degree bounds forced by v(F) >= -(n - j) at infinity.
    int deg_a = floor_div(nmj, 2) + rd.j;
    int deg_b = floor_div(nmj - (2 * g + 1), 2) + rd.j;
    int n_a = deg_a + 1;
    int n_b = deg_b >= 0 ? deg_b + 1 : 0;

    Poly den = Poly::constant(k, k.one());
    for (const auto& [p, m] : rd.affine) den = den * Poly::x_minus(k, p.x()).pow(m);
    int prec = precision_override > 0 ? precision_override : 2 * rd.j + 2 * g + 2;

    // Every place over a denominator abscissa: the divisor points and their
    // opposites. Each contributes v(numerator) >= ord(den) - mult conditions.
    std::map<Point, int> relevant;
    for (const auto& [p, m] : rd.affine) {
        relevant.emplace(p, d.mult_at(p));
        Point q = curve.opposite(p);
        relevant.emplace(q, d.mult_at(q));
    }

    std::vector<std::vector<FieldElement>> rows;
    auto add_row = [&]() -> std::vector<FieldElement>& {
        rows.emplace_back(n_a + n_b, k.zero());
        return rows.back();
    };

    for (const auto& [pt, mult] : relevant) {
        const FieldElement& a = pt.x();
        const FieldElement& b = pt.y();
        int den_ord = den.ord_at(a);
        Poly lin(k, {a, k.one()});
        int max_deg = std::max(deg_a, deg_b);
        std::vector<Poly> shift_pows;  // (u + a)^d
        shift_pows.push_back(Poly::constant(k, k.one()));
        for (int dgr = 1; dgr <= max_deg; ++dgr) shift_pows.push_back(shift_pows.back() * lin);

        if (curve.is_ramification(pt)) {
            int req = 2 * den_ord - mult;
            if (req < 1) continue;
            int need_even = (req + 1) / 2;  // ord_a(A + b B) >= ceil(req / 2)
            int need_odd = req / 2;         // ord_a(B) >= ceil((req - 1) / 2)
            for (int i = 0; i < need_even; ++i) {
                auto& row = add_row();
                for (int dgr = 0; dgr <= deg_a; ++dgr) row[dgr] = shift_pows[dgr].coeff(i);
                for (int dgr = 0; dgr <= deg_b; ++dgr)
                    row[n_a + dgr] = k.mul(b, shift_pows[dgr].coeff(i));
            }
            for (int i = 0; i < need_odd; ++i) {
                auto& row = add_row();
                for (int dgr = 0; dgr <= deg_b; ++dgr) row[n_a + dgr] = shift_pows[dgr].coeff(i);
            }
        } else {
            int req = den_ord - mult;
            if (req < 1) continue;
            Poly tau = branch_series(curve, a, b, std::max(req, prec));
            std::vector<Poly> shift_tau;  // (u + a)^d * tau, truncated
            shift_tau.reserve(static_cast<size_t>(std::max(deg_b + 1, 0)));
            for (int dgr = 0; dgr <= deg_b; ++dgr)
                shift_tau.push_back((shift_pows[dgr] * tau).truncated(req));
            for (int i = 0; i < req; ++i) {
                auto& row = add_row();
                for (int dgr = 0; dgr <= deg_a; ++dgr) row[dgr] = shift_pows[dgr].coeff(i);
                for (int dgr = 0; dgr <= deg_b; ++dgr) row[n_a + dgr] = shift_tau[dgr].coeff(i);
            }
        }
    }

    if (rows.empty()) return n_a + n_b;
    Matrix m(k, rows.size(), n_a + n_b);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return n_a + n_b - static_cast<int>(rref(m).rank);
}

}  // namespace rrcode
