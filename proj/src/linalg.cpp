/*
   Copyright 2026 The omegacub Authors

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

#include "omegacub/linalg.hpp"

#include <utility>

#include "omegacub/errors.hpp"

namespace omegacub {

CycMatrix::CycMatrix(int m, std::size_t rows, std::size_t cols)
    : m_(m), rows_(rows), cols_(cols), data_(rows * cols, CycNum(m)) {}

CycMatrix CycMatrix::transpose() const {
    CycMatrix t(m_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<CycNum> CycMatrix::column(std::size_t j) const {
    std::vector<CycNum> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
}

std::vector<CycNum> CycMatrix::apply(std::span<const CycNum> x) const {
    if (x.size() != cols_) throw InputError("CycMatrix::apply: size mismatch");
    std::vector<CycNum> y(rows_, CycNum(m_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!x[j].is_zero()) y[i] += (*this)(i, j) * x[j];
    return y;
}

namespace {

// Forward elimination to row-echelon form on rows x [0, ncols); returns rank.
// Extra columns (an augmented right-hand side) are carried along.
std::size_t eliminate(CycMatrix& a, std::size_t ncols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        const CycNum inv_pivot = a(r, c).inv();
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv_pivot;
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, c).is_zero()) continue;
            const CycNum f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

}  // namespace

std::size_t rank(CycMatrix a) { return eliminate(a, a.cols()); }

std::optional<std::vector<CycNum>> solve(CycMatrix a, std::vector<CycNum> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw InputError("solve: expected a square system");
    CycMatrix aug(a.modulus(), n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = std::move(a(i, j));
        aug(i, n) = std::move(b[i]);
    }
    if (eliminate(aug, n) < n) return std::nullopt;
    // Unit upper-triangular now; back substitution.
    std::vector<CycNum> x(n, CycNum(a.modulus()));
    for (std::size_t i = n; i-- > 0;) {
        CycNum s = aug(i, n);
        for (std::size_t j = i + 1; j < n; ++j)
            if (!aug(i, j).is_zero()) s -= aug(i, j) * x[j];
        x[i] = std::move(s);
    }
    return x;
}

void IncrementalSpan::reduce(std::vector<CycNum>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t p = pivots_[r];
        if (v[p].is_zero()) continue;
        const CycNum f = v[p];
        for (std::size_t j = 0; j < n_; ++j)
            if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
    }
}

bool IncrementalSpan::contains(std::vector<CycNum> v) const {
    if (v.size() != n_) throw InputError("IncrementalSpan: vector length mismatch");
    reduce(v);
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

bool IncrementalSpan::try_add(std::vector<CycNum> v) {
    if (v.size() != n_) throw InputError("IncrementalSpan: vector length mismatch");
    reduce(v);
    std::size_t p = 0;
    while (p < n_ && v[p].is_zero()) ++p;
    if (p == n_) return false;
    const CycNum inv_pivot = v[p].inv();
    for (auto& x : v) x *= inv_pivot;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

}  // namespace omegacub
