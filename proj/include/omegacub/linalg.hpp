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

#ifndef OMEGACUB_LINALG_HPP
#define OMEGACUB_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "omegacub/cyclo.hpp"

namespace omegacub {

/// Dense row-major matrix over Q(w_m).
class CycMatrix {
   public:
    CycMatrix(int m, std::size_t rows, std::size_t cols);

    int modulus() const noexcept { return m_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    CycNum& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const CycNum& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    CycMatrix transpose() const;
    std::vector<CycNum> column(std::size_t j) const;
    std::vector<CycNum> apply(std::span<const CycNum> x) const;

    friend bool operator==(const CycMatrix&, const CycMatrix&) = default;

   private:
    int m_;
    std::size_t rows_, cols_;
    std::vector<CycNum> data_;
};

/// Exact rank by forward elimination, pivoting on the first nonzero entry.
std::size_t rank(CycMatrix a);

/// Solves a x = b for square nonsingular a; nullopt if a is singular.
std::optional<std::vector<CycNum>> solve(CycMatrix a, std::vector<CycNum> b);

/// Row-echelon basis of a growing set of vectors in Q(w_m)^n.
class IncrementalSpan {
   public:
    IncrementalSpan(int m, std::size_t n) : m_(m), n_(n) {}

    std::size_t rank() const noexcept { return rows_.size(); }
    bool full() const noexcept { return rows_.size() == n_; }

    /// True iff v lies in the current span.
    bool contains(std::vector<CycNum> v) const;
    /// Adds v when it is independent of the current span; returns whether it was added.
    bool try_add(std::vector<CycNum> v);

   private:
    void reduce(std::vector<CycNum>& v) const;

    int m_;
    std::size_t n_;
    std::vector<std::vector<CycNum>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace omegacub

#endif
