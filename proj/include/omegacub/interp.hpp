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

#ifndef OMEGACUB_INTERP_HPP
#define OMEGACUB_INTERP_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "omegacub/cyclo.hpp"
#include "omegacub/design.hpp"
#include "omegacub/linalg.hpp"

namespace omegacub {

/// An ordered set S of reduced monomials in Z_m^k. If the constant monomial is
/// present it must come first.
class MonomialBasis {
   public:
    MonomialBasis(int m, std::size_t k, std::vector<Monomial> monomials);

    int modulus() const noexcept { return m_; }
    std::size_t dimension() const noexcept { return k_; }
    std::size_t size() const noexcept { return monomials_.size(); }
    const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
    const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
    bool contains(const Monomial& alpha) const;

    std::string to_string() const;

    friend bool operator==(const MonomialBasis&, const MonomialBasis&) = default;

   private:
    int m_;
    std::size_t k_;
    std::vector<Monomial> monomials_;
};

/// A polynomial sum_t c_t z^{alpha_t} with coefficients in Q(w_m).
struct PolyTerm {
    CycNum coeff;
    Monomial monomial;
};
using Polynomial = std::vector<PolyTerm>;

/// X_{D,S} = [s(d)], rows in node order, columns in basis order.
CycMatrix evaluation_matrix(const Design& design, const MonomialBasis& basis);
/// Same for an arbitrary polynomial basis.
CycMatrix evaluation_matrix(const Design& design, std::span<const Polynomial> basis);

/// [z^alpha(d)]_{d in D}
std::vector<CycNum> evaluation_vector(const Design& design, const Monomial& alpha);

std::size_t evaluation_rank(const Design& design, const MonomialBasis& basis);

/// True iff |S| = n and X_{D,S} is nonsingular.
bool is_correct_pair(const Design& design, const MonomialBasis& basis);

/// Candidate scan order for quotient_basis: degree-lex (z_1 > ... > z_k,
/// smallest first) or an explicit priority list completed by degree-lex.
class TermOrder {
   public:
    static TermOrder deglex() { return TermOrder({}); }
    static TermOrder explicit_list(std::vector<Monomial> priority) { return TermOrder(std::move(priority)); }

    bool is_deglex() const noexcept { return priority_.empty(); }
    const std::vector<Monomial>& priority() const noexcept { return priority_; }

    /// Every reduced class of Z_m^k exactly once, in scan order.
    std::vector<Monomial> scan_sequence(int m, std::size_t k) const;

   private:
    explicit TermOrder(std::vector<Monomial> priority) : priority_(std::move(priority)) {}
    std::vector<Monomial> priority_;
};

/// Greedy extraction of a monomial basis of C[z]/I(D): scans the reduced classes
/// in the given order and keeps z^alpha iff its evaluation vector is independent
/// of those already kept. Always returns n monomials forming a correct pair.
MonomialBasis quotient_basis(const Design& design, const TermOrder& order = TermOrder::deglex());

}  // namespace omegacub

#endif
