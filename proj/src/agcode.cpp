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

#include "rrcode/agcode.hpp"

#include <cassert>
#include <stdexcept>

#include "rrcode/errors.hpp"

namespace rrcode {

LinearCode LinearCode::make(Matrix gen, std::optional<int> deg_d) {
    if (gen.rows() == 0 || gen.cols() == 0)
        fail("BadEvaluationSet", "generator matrix must be nonempty");
    Matrix copy = gen;
    if (rref(copy).rank != gen.rows())
        fail("RankDeficient", "generator rows are linearly dependent");
    return LinearCode(std::move(gen), deg_d);
}

LinearCode generator_matrix(const Curve& curve, const Divisor& d, const std::vector<Point>& g,
                            const std::optional<Poly>& kappa_override) {
    if (g.empty()) fail("BadEvaluationSet", "need at least one evaluation point");
    for (size_t i = 0; i < g.size(); ++i) {
        if (g[i].is_infinity()) fail("BadEvaluationSet", "evaluation points must be affine");
        curve.require_on_curve(g[i]);
        if (d.contains(g[i]))
            fail("PointInSupport", "evaluation point " + std::to_string(i) +
                                       " lies in the support of D");
        for (size_t l = i + 1; l < g.size(); ++l)
            if (g[i] == g[l]) fail("DuplicatePoint", "evaluation point repeated");
    }

    RRBasis basis = rr_basis(curve, d, kappa_override);
    Matrix gen(curve.field(), basis.elements.size(), g.size());
    for (size_t r = 0; r < basis.elements.size(); ++r)
        for (size_t c = 0; c < g.size(); ++c)
            gen.at(r, c) = ff_eval(curve, basis.elements[r], g[c]);
    return LinearCode::make(std::move(gen), d.degree());
}

ParityCheck parity_check(const LinearCode& code) {
    const Field& fld = code.field();
    size_t k = code.k(), m = code.m();
    Rref red = rref(code.gen());
    assert(red.rank == k);

    ParityCheck out{Matrix(fld, m - k, m), red.pivot_cols, false};
    for (size_t i = 0; i < k; ++i)
        if (red.pivot_cols[i] != i) out.permuted = true;

    // Column order: pivots first, then the free columns.
    std::vector<size_t> perm;
    perm.reserve(m);
    std::vector<bool> is_pivot(m, false);
    for (size_t pc : red.pivot_cols) is_pivot[pc] = true;
    for (size_t pc : red.pivot_cols) perm.push_back(pc);
    for (size_t c = 0; c < m; ++c)
        if (!is_pivot[c]) perm.push_back(c);

    // In permuted coordinates gen ~ [I_k | A]; H' = [-A^T | I_{m-k}].
    for (size_t r = 0; r < m - k; ++r) {
        for (size_t c = 0; c < k; ++c)
            out.h.at(r, perm[c]) = fld.neg(red.mat.at(c, perm[k + r]));
        out.h.at(r, perm[k + r]) = fld.one();
    }

    if (!(code.gen() * out.h.transposed()).is_zero())
        throw std::logic_error("parity check does not annihilate the generator");
    return out;
}

DistanceReport min_distance(const LinearCode& code, int64_t budget) {
    const Field& fld = code.field();
    size_t k = code.k(), m = code.m();

    long double total = 1;
    for (size_t i = 0; i < k; ++i) total *= static_cast<long double>(fld.q());
    if (total - 1 > static_cast<long double>(budget))
        fail("BudgetExceeded", "q^k - 1 exceeds the enumeration budget");

    std::vector<FieldElement> elems = fld.enumerate();
    int best = static_cast<int>(m) + 1;

    // One representative per scalar class: leading nonzero coordinate = 1.
    std::vector<FieldElement> word(m, fld.zero());
    std::vector<size_t> idx;
    for (size_t lead = 0; lead < k; ++lead) {
        size_t free_coords = k - lead - 1;
        idx.assign(free_coords, 0);
        for (;;) {
            for (size_t c = 0; c < m; ++c) word[c] = code.gen().at(lead, c);
            for (size_t i = 0; i < free_coords; ++i) {
                const FieldElement& u = elems[idx[i]];
                if (u.is_zero()) continue;
                for (size_t c = 0; c < m; ++c)
                    word[c] = fld.add(word[c], fld.mul(u, code.gen().at(lead + 1 + i, c)));
            }
            int weight = 0;
            for (size_t c = 0; c < m; ++c)
                if (!word[c].is_zero()) ++weight;
            best = std::min(best, weight);

            size_t pos = 0;
            while (pos < free_coords && ++idx[pos] == elems.size()) idx[pos++] = 0;
            if (pos == free_coords) break;
        }
    }

    DistanceReport out{best, best == static_cast<int>(m - k + 1)};
    if (code.deg_d() && static_cast<int>(m) > *code.deg_d() &&
        out.d < static_cast<int>(m) - *code.deg_d())
        throw std::logic_error("distance fell below the designed lower bound m - deg(D)");
    return out;
}

}  // namespace rrcode
