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

#include "qtw/linalg.hpp"

#include <algorithm>

namespace qtw {

namespace {

void axpy(const Field* f, Element c, const std::vector<uint32_t>& src, std::vector<uint32_t>& dst) {
    if (c.is_zero()) return;
    for (size_t j = 0; j < src.size(); ++j) {
        if (src[j] == 0) continue;
        dst[j] = (f->from_index(dst[j]) + c * f->from_index(src[j])).v;
    }
}

}  // namespace

std::vector<uint32_t> Rref::residual(std::vector<uint32_t> v) const {
    const Field* f = mat.field;
    for (size_t r = 0; r < mat.nrows(); ++r) {
        uint32_t c = v[size_t(pivot_cols[r])];
        if (c == 0) continue;
        axpy(f, f->neg(f->from_index(c)), mat.rows[r], v);
    }
    return v;
}

bool Rref::contains(const std::vector<uint32_t>& v) const {
    auto r = residual(v);
    return std::all_of(r.begin(), r.end(), [](uint32_t x) { return x == 0; });
}

Rref rref(const Mat& m) {
    const Field* f = m.field;
    Rref out;
    out.mat = Mat(f, m.cols);
    std::vector<std::vector<uint32_t>> work = m.rows;
    size_t lead = 0;
    for (size_t col = 0; col < m.cols && lead < work.size(); ++col) {
        size_t piv = lead;
        while (piv < work.size() && work[piv][col] == 0) ++piv;
        if (piv == work.size()) continue;
        std::swap(work[lead], work[piv]);
        Element inv = f->inv(f->from_index(work[lead][col]));
        for (auto& x : work[lead]) x = (f->from_index(x) * inv).v;
        for (size_t r = 0; r < work.size(); ++r) {
            if (r == lead || work[r][col] == 0) continue;
            axpy(f, f->neg(f->from_index(work[r][col])), work[lead], work[r]);
        }
        out.pivot_cols.push_back(int(col));
        ++lead;
    }
    out.mat.rows.assign(work.begin(), work.begin() + long(lead));
    return out;
}

Mat nullspace(const Mat& m) {
    const Field* f = m.field;
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : r.pivot_cols) is_pivot[size_t(c)] = true;
    Mat out(f, m.cols);
    for (size_t free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<uint32_t> v(m.cols, 0);
        v[free_col] = f->one().v;
        for (size_t row = 0; row < r.rank(); ++row) {
            uint32_t c = r.mat.rows[row][free_col];
            if (c != 0) v[size_t(r.pivot_cols[row])] = f->neg(f->from_index(c)).v;
        }
        out.rows.push_back(std::move(v));
    }
    return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.cols != b.nrows()) throw DomainError("matrix product shape mismatch");
    const Field* f = a.field;
    Mat out(f, b.cols);
    for (size_t i = 0; i < a.nrows(); ++i) {
        std::vector<uint32_t> row(b.cols, 0);
        for (size_t k = 0; k < a.cols; ++k) {
            if (a.rows[i][k] == 0) continue;
            axpy(f, f->from_index(a.rows[i][k]), b.rows[k], row);
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

bool rowspace_contained(const Mat& a, const Rref& b) {
    for (const auto& row : a.rows)
        if (!b.contains(row)) return false;
    return true;
}

}  // namespace qtw
