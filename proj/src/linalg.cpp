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

#include "rrcode/linalg.hpp"

#include <algorithm>
#include <cassert>

#include "rrcode/errors.hpp"

namespace rrcode {

Matrix::Matrix(Field k, size_t rows, size_t cols)
    : field_(std::move(k)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

Matrix Matrix::identity(const Field& k, size_t n) {
    Matrix out(k, n, n);
    for (size_t i = 0; i < n; ++i) out.at(i, i) = k.one();
    return out;
}

Matrix Matrix::from_ints(const Field& k, const std::vector<std::vector<int64_t>>& rows) {
    size_t nc = rows.empty() ? 0 : rows[0].size();
    Matrix out(k, rows.size(), nc);
    for (size_t r = 0; r < rows.size(); ++r) {
        assert(rows[r].size() == nc);
        for (size_t c = 0; c < nc; ++c) out.at(r, c) = k.from_int(rows[r][c]);
    }
    return out;
}

FieldElement& Matrix::at(size_t r, size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
}

const FieldElement& Matrix::at(size_t r, size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    assert(cols_ == rhs.rows_ && field_ == rhs.field_);
    Matrix out(field_, rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < rhs.cols_; ++j) {
            FieldElement acc = field_.zero();
            for (size_t l = 0; l < cols_; ++l)
                acc = field_.add(acc, field_.mul(at(i, l), rhs.at(l, j)));
            out.at(i, j) = acc;
        }
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const FieldElement& e) { return e.is_zero(); });
}

std::string Matrix::tsv() const {
    std::string out;
    for (size_t r = 0; r < rows_; ++r) {
        if (r) out += "\n";
        for (size_t c = 0; c < cols_; ++c) {
            if (c) out += "\t";
            out += field_.str(at(r, c));
        }
    }
    return out;
}

Rref rref(const Matrix& a) {
    Rref out{a, {}, 0};
    Matrix& m = out.mat;
    const Field& k = a.field();
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (size_t c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
        FieldElement scale = k.inv(m.at(row, col));
        for (size_t c = col; c < m.cols(); ++c) m.at(row, c) = k.mul(m.at(row, c), scale);
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            FieldElement factor = m.at(r, col);
            for (size_t c = col; c < m.cols(); ++c)
                m.at(r, c) = k.sub(m.at(r, c), k.mul(factor, m.at(row, c)));
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.rank = row;
    return out;
}

LinSolve linsolve(const Matrix& a, const std::vector<FieldElement>& rhs) {
    assert(rhs.size() == a.rows());
    const Field& k = a.field();
    Matrix aug(k, a.rows(), a.cols() + 1);
    for (size_t r = 0; r < a.rows(); ++r) {
        for (size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = rhs[r];
    }
    Rref red = rref(aug);

    LinSolve out;
    bool inconsistent = !red.pivot_cols.empty() && red.pivot_cols.back() == a.cols();
    std::vector<size_t> pivots;
    for (size_t pc : red.pivot_cols)
        if (pc < a.cols()) pivots.push_back(pc);

    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t pc : pivots) is_pivot[pc] = true;

    if (!inconsistent) {
        std::vector<FieldElement> sol(a.cols(), k.zero());
        for (size_t r = 0; r < pivots.size(); ++r) sol[pivots[r]] = red.mat.at(r, a.cols());
        out.particular = std::move(sol);
    }

    for (size_t fc = 0; fc < a.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<FieldElement> vec(a.cols(), k.zero());
        vec[fc] = k.one();
        for (size_t r = 0; r < pivots.size(); ++r)
            vec[pivots[r]] = k.neg(red.mat.at(r, fc));
        out.nullspace.push_back(std::move(vec));
    }
    return out;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    const Field& k = a.field();
    size_t n = a.rows();
    Matrix aug(k, n, 2 * n);
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, n + r) = k.one();
    }
    Rref red = rref(aug);
    for (size_t i = 0; i < n; ++i)
        if (i >= red.pivot_cols.size() || red.pivot_cols[i] != i) return std::nullopt;
    Matrix out(k, n, n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) out.at(r, c) = red.mat.at(r, n + c);
    return out;
}

}  // namespace rrcode
