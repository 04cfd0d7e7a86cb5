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
#include <optional>
#include <vector>

#include "rrcode/linalg.hpp"
#include "rrcode/rrbasis.hpp"

namespace rrcode {

/// Linear [m, k] code given by a full-rank generator matrix. deg_d, when
/// attached, is the degree of the divisor D of the evaluation construction
/// and feeds the lower distance bound d >= m - deg(D).
class LinearCode {
   public:
    /// Throws RankDeficient when the rows are dependent.
    static LinearCode make(Matrix gen, std::optional<int> deg_d = std::nullopt);

    const Matrix& gen() const noexcept { return gen_; }
    const Field& field() const noexcept { return gen_.field(); }
    size_t k() const noexcept { return gen_.rows(); }
    size_t m() const noexcept { return gen_.cols(); }
    std::optional<int> deg_d() const noexcept { return deg_d_; }

   private:
    LinearCode(Matrix gen, std::optional<int> deg_d) : gen_(std::move(gen)), deg_d_(deg_d) {}
    Matrix gen_;
    std::optional<int> deg_d_;
};

/// Evaluation (Goppa) code C_L(D, G): rows are the L(D) basis elements in
/// their fixed order, columns the points of G in input order.
/// Throws BadEvaluationSet, DuplicatePoint, PointInSupport, NotOnCurve,
/// RankDeficient, plus anything rr_basis raises.
LinearCode generator_matrix(const Curve& curve, const Divisor& d, const std::vector<Point>& g,
                            const std::optional<Poly>& kappa_override = std::nullopt);

struct ParityCheck {
    Matrix h;
    std::vector<size_t> pivot_cols;
    /// True when the pivots were not the first k columns and a column
    /// permutation was applied internally (and undone).
    bool permuted = false;
};

/// Systematic-form parity check: gen ~ [I_k | A] gives H = [-A^T | I_{m-k}];
/// non-leading pivots are handled by permuting columns, building H there and
/// un-permuting. Always gen * H^T = 0 and rank(H) = m - k.
ParityCheck parity_check(const LinearCode& code);

struct DistanceReport {
    int d = 0;
    bool mds = false;
};

/// Exhaustive minimum nonzero codeword weight (scalar multiples are
/// enumerated once). Requires q^k - 1 <= budget, else BudgetExceeded.
/// Verifies d >= m - deg(D) when the divisor degree is attached.
DistanceReport min_distance(const LinearCode& code, int64_t budget = 10'000'000);

}  // namespace rrcode
