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

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "rrcode/agcode.hpp"
#include "rrcode/curve.hpp"
#include "rrcode/funcfield.hpp"
#include "rrcode/rrbasis.hpp"

namespace rrtest {

using namespace rrcode;

inline Poly P(const Field& k, const std::vector<int64_t>& coeffs) {
    return Poly::from_ints(k, coeffs);
}

inline Point pt(const Field& k, int64_t a, int64_t b) {
    return Point::affine(k.from_int(a), k.from_int(b));
}

// The worked curves used throughout the test suites.

inline Curve gf5_curve() {  // y^2 = x^5 + 4x + 1 over GF(5), genus 2
    Field k = Field::make(5, 1);
    return Curve::make(k, P(k, {1, 4, 0, 0, 0, 1}), Poly(k));
}

inline Curve gf13_curve() {  // y^2 = x^5 + 4x^3 + 9x over GF(13), genus 2
    Field k = Field::make(13, 1);
    return Curve::make(k, P(k, {0, 9, 0, 4, 0, 1}), Poly(k));
}

inline Curve gf17_curve() {  // y^2 = x^5 + 13x^4 + 5x^3 + 11x^2 + 5x + 15, genus 2
    Field k = Field::make(17, 1);
    return Curve::make(k, P(k, {15, 5, 11, 5, 13, 1}), Poly(k));
}

inline Curve gf4_curve() {  // y^2 + y = x^5 + x^3 + x over GF(4), genus 2
    Field k = Field::make(2, 2, {1, 1, 1});
    return Curve::make(k, P(k, {0, 1, 0, 1, 0, 1}), P(k, {1}));
}

// The genus-3 curve fitted through the shifted powers (x-1)^2 .. (x-1)^7; its
// affine model has a double root of f at x = 1 and needs the waiver.
inline std::vector<int64_t> gf31_f_coeffs() { return {0, 1, 12, 7, 25, 18, 12, 18}; }

inline Curve gf31_curve() {
    Field k = Field::make(31, 1);
    return Curve::make(k, P(k, gf31_f_coeffs()), Poly(k), /*singular_ok=*/true);
}

inline Poly gf31_kappa(const Field& k) { return P(k, {0, 30, 1}); }  // (x-1) + (x-1)^2

inline Divisor gf31_divisor(const Field& k) {
    Divisor d;
    d.add(pt(k, 0, 0), 1);
    d.add(pt(k, 1, 0), 2);
    d.add(Point::infinity(), 1);
    return d;
}

inline Divisor gf5_divisor(const Field& k) {
    Divisor d;
    d.add(pt(k, 0, 1), 1);
    d.add(pt(k, 1, 4), 1);
    d.add(Point::infinity(), 2);
    return d;
}

// Deterministic generators for the property sweeps.

inline Curve random_nonsingular_curve(std::mt19937_64& rng, const Field& k, int genus) {
    for (;;) {
        std::vector<FieldElement> c(2 * genus + 2, k.zero());
        for (int i = 0; i < 2 * genus + 1; ++i) c[i] = k.from_index(rng() % k.q());
        c[2 * genus + 1] = k.one();
        try {
            return Curve::make(k, Poly(k, c), Poly(k));
        } catch (const Error&) {
            continue;  // singular draw, resample
        }
    }
}

inline Curve random_nonsingular_curve(std::mt19937_64& rng, int64_t p, int genus) {
    return random_nonsingular_curve(rng, Field::make(p, 1), genus);
}

// Reduced divisor with j spread over non-ramification points of distinct
// abscissas (multiplicities 1 or 2) plus (n - j) at infinity. Fails when the
// curve has too few usable abscissas.
inline std::optional<Divisor> random_reduced_divisor(std::mt19937_64& rng, const Curve& curve,
                                                     int j, int n) {
    std::vector<Point> pool;
    for (const auto& p : curve.rational_points()) {
        if (p.is_infinity() || curve.is_ramification(p)) continue;
        bool fresh = true;
        for (const auto& q : pool)
            if (q.x() == p.x()) fresh = false;
        if (fresh) pool.push_back(p);  // one of the two points per abscissa
    }
    std::shuffle(pool.begin(), pool.end(), rng);

    Divisor d;
    int remaining = j;
    size_t next = 0;
    while (remaining > 0) {
        if (next >= pool.size()) return std::nullopt;
        int m = (remaining >= 2 && rng() % 2 == 0) ? 2 : 1;
        Point p = rng() % 2 == 0 ? pool[next] : curve.opposite(pool[next]);
        d.add(p, m);
        remaining -= m;
        ++next;
    }
    if (n > j) d.add(Point::infinity(), n - j);
    return d;
}

// Random nonzero function-field element with denominator supported on
// rational abscissas, so its valuations stay interesting.
inline FuncElem random_func_elem(std::mt19937_64& rng, const Curve& curve) {
    const Field& k = curve.field();
    auto rand_poly = [&](int maxdeg) {
        std::vector<FieldElement> c(static_cast<size_t>(rng() % (maxdeg + 2)), k.zero());
        for (auto& v : c) v = k.from_index(rng() % k.q());
        return Poly(k, c);
    };
    for (;;) {
        Poly a = rand_poly(3);
        Poly b = rand_poly(2);
        if (a.is_zero() && b.is_zero()) continue;
        Poly c = Poly::constant(k, k.one());
        int factors = static_cast<int>(rng() % 3);
        for (int i = 0; i < factors; ++i) {
            FieldElement at = k.from_index(rng() % k.q());
            c = c * Poly::x_minus(k, at);
        }
        return FuncElem(std::move(a), std::move(b), std::move(c));
    }
}

// Rank of the stacked coefficient vectors after clearing denominators by the
// product of all of them; equals the dimension the set spans.
inline int basis_rank(const Curve& curve, const std::vector<FuncElem>& elems) {
    const Field& k = curve.field();
    Poly common = Poly::constant(k, k.one());
    for (const auto& f : elems) common = common * f.den();
    std::vector<std::pair<Poly, Poly>> cleared;
    int max_deg = 0;
    for (const auto& f : elems) {
        FuncElem g = ff_mul(curve, f, FuncElem::from_poly(common));
        if (g.den().degree() != 0) throw std::logic_error("denominator did not clear");
        cleared.emplace_back(g.num_a(), g.num_b());
        max_deg = std::max({max_deg, g.num_a().degree(), g.num_b().degree()});
    }
    Matrix m(k, elems.size(), 2 * (max_deg + 1));
    for (size_t r = 0; r < cleared.size(); ++r) {
        for (int i = 0; i <= max_deg; ++i) {
            m.at(r, i) = cleared[r].first.coeff(i);
            m.at(r, max_deg + 1 + i) = cleared[r].second.coeff(i);
        }
    }
    return static_cast<int>(rref(m).rank);
}

}  // namespace rrtest
