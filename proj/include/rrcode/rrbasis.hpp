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

#include <optional>
#include <vector>

#include "rrcode/funcfield.hpp"

namespace rrcode {

/// The interpolating curve y = k(x) (projectively Y T^(delta-1) - k(X, T))
/// through the involuted divisor points, with delta = max(deg k, 1).
struct KappaCurve {
    Poly k;
    int delta = 1;
};

/// Interpolation target: an affine curve point with multiplicity, meaning the
/// intersection order of y = k(x) with the curve at q must reach mult, i.e.
/// ord_a(k^2 + k h - f) >= mult with k(a) = q.y.
struct KappaTarget {
    Point q;
    int mult = 1;
};

/// Divisor in reduced shape sum m_i P_i + (n - j) Omega.
struct ReducedDivisor {
    std::vector<std::pair<Point, int>> affine;  // canonical point order
    int omega = 0;                              // n - j
    int j = 0;                                  // sum of affine multiplicities
    int n = 0;                                  // degree
};

/// Validates shape (effective, affine points on curve, omega >= 0, j <= genus).
/// Throws BadDivisor, DegreeTooSmall, NotOnCurve.
ReducedDivisor decompose_reduced(const Curve& curve, const Divisor& d);

/// Truncated expansion of the y-branch through the non-ramification point
/// (a, b): the unique tau with tau(a) = b and tau^2 + tau h = f mod
/// (x - a)^prec, computed by linear Hensel lifting in powers of u = x - a.
/// The result is a polynomial in u with prec coefficients.
Poly branch_series(const Curve& curve, const FieldElement& a, const FieldElement& b, int prec);

/// Finds k of smallest degree with, per distinct abscissa a carrying total
/// multiplicity m at target (a, q):
///   - non-ramification target: k congruent to the Hensel branch through
///     (a, q) mod (x - a)^m;
///   - ramification target, m = 1: k(a) = q;
///   - ramification target, m = 2: k(a) = q, feasible only when
///     ord_a(f - q^2 - q h) >= 2.
/// Among minimal-degree solutions the one with the canonical-order-smallest
/// coefficient vector is returned. A supplied override is validated against
/// the interpolation invariants instead of solving.
/// Throws NoInterpolant, UnsupportedMultiplicity, BadKappaOverride.
KappaCurve kappa_interpolate(const Curve& curve, const std::vector<KappaTarget>& targets,
                             const std::optional<Poly>& override_k = std::nullopt);

/// Psi for the divisor D = sum m_i P_i + (n - j) Omega: y when j = 0, else
/// (y - k(x)) / prod (x - a_i)^{m_i} where k interpolates the opposite
/// points with the same multiplicities.
FuncElem psi_build(const Curve& curve, const Divisor& d,
                   const std::optional<Poly>& kappa_override = std::nullopt);

struct RRBasis {
    /// Ordered x^0, x^1, ..., then psi x^0, psi x^1, ...
    std::vector<FuncElem> elements;
    std::optional<FuncElem> psi;
    int n = 0, j = 0, genus = 0;
    bool with_psi = false;
};

/// Explicit basis of L(D):
///   n - j >= 2(g - j) + 1: { x^h : h <= (n-j)/2 } union
///                          { psi x^k : k <= ((n-j) - 2(g-j) - 1)/2 };
///   otherwise just the x-powers (psi does not lie in L(D)).
RRBasis rr_basis(const Curve& curve, const Divisor& d,
                 const std::optional<Poly>& kappa_override = std::nullopt);

/// dim L(D) for D reduced to j affine points plus (n - j) Omega:
/// n - g + 1 when n >= 2g - j, else floor((n - j)/2) + 1.
/// Throws OutOfRange unless 1 <= g, 0 <= j <= g, n >= j.
int rr_dim(int genus, int j, int n);

/// Independent dimension computation by pure linear algebra: ansatz
/// F = (A + B y) / prod (x - a_i)^{m_i} with degree bounds forced by the pole
/// order at infinity, pole/regularity constraints extracted from truncated
/// local expansions, dimension = surviving degrees of freedom. Makes no use
/// of the basis construction above. Requires a certified nonsingular curve.
/// precision_override (when positive) replaces the default series precision
/// 2 sum m_i + 2g + 2.
int dim_oracle(const Curve& curve, const Divisor& d, int precision_override = 0);

}  // namespace rrcode
