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
#include <string>
#include <vector>

#include "rrcode/field.hpp"

namespace rrcode {

/// Dense row-major matrix over a Field.
class Matrix {
   public:
    Matrix(Field k, size_t rows, size_t cols);
    static Matrix identity(const Field& k, size_t n);
    static Matrix from_ints(const Field& k, const std::vector<std::vector<int64_t>>& rows);

    const Field& field() const noexcept { return field_; }
    size_t rows() const noexcept { return rows_; }
    size_t cols() const noexcept { return cols_; }
    FieldElement& at(size_t r, size_t c);
    const FieldElement& at(size_t r, size_t c) const;

    Matrix operator*(const Matrix& rhs) const;
    Matrix transposed() const;
    bool is_zero() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Tab-separated entries, newline-separated rows, no trailing newline.
    std::string tsv() const;

   private:
    Field field_;
    size_t rows_, cols_;
    std::vector<FieldElement> data_;
};

struct Rref {
    Matrix mat;
    std::vector<size_t> pivot_cols;
    size_t rank = 0;
};

/// Reduced row echelon form. Deterministic pivoting: for each column the
/// first remaining row with a nonzero entry is chosen.
Rref rref(const Matrix& a);

struct LinSolve {
    /// Absent when the system is inconsistent.
    std::optional<std::vector<FieldElement>> particular;
    /// Canonical basis of the nullspace of A: one vector per free column,
    /// with a 1 at that column and 0 at the other free columns.
    std::vector<std::vector<FieldElement>> nullspace;
};

/// Gauss-Jordan solve of A x = rhs. The particular solution has every free
/// variable set to 0, which makes it the canonical-order-smallest solution.
LinSolve linsolve(const Matrix& a, const std::vector<FieldElement>& rhs);

/// Inverse, or nothing when singular.
std::optional<Matrix> inverse(const Matrix& a);

}  // namespace rrcode
