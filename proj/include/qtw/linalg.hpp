/*
   Copyright 2026 the quasitwist authors

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

#ifndef QTW_LINALG_HPP
#define QTW_LINALG_HPP

#include <cstdint>
#include <vector>

#include "qtw/field.hpp"

namespace qtw {

/// Dense row-major matrix over GF(q); rows are element-index vectors.
struct Mat {
    const Field* field = nullptr;
    size_t cols = 0;
    std::vector<std::vector<uint32_t>> rows;

    Mat() = default;
    Mat(const Field* f, size_t cols) : field(f), cols(cols) {}

    void append_row(std::vector<uint32_t> r) {
        if (r.size() != cols) throw DomainError("row length mismatch");
        rows.push_back(std::move(r));
    }
    size_t nrows() const { return rows.size(); }
};

/// Reduced row echelon form with pivot bookkeeping. Rows are the nonzero
/// RREF rows, so nrows() == rank.
struct Rref {
    Mat mat;
    std::vector<int> pivot_cols;  // one per row, increasing

    size_t rank() const { return mat.nrows(); }
    /// Residual of v after elimination against the RREF rows.
    std::vector<uint32_t> residual(std::vector<uint32_t> v) const;
    bool contains(const std::vector<uint32_t>& v) const;
};

Rref rref(const Mat& m);

/// Basis of { x : m * x^T = 0 }, returned as rows of length m.cols.
Mat nullspace(const Mat& m);

/// a * b with a.cols == b.rows... standard product.
Mat mat_mul(const Mat& a, const Mat& b);

/// Row space of a contained in row space of b.
bool rowspace_contained(const Mat& a, const Rref& b);

}  // namespace qtw

#endif
