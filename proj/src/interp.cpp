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

#include "omegacub/interp.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "omegacub/errors.hpp"

namespace omegacub {

MonomialBasis::MonomialBasis(int m, std::size_t k, std::vector<Monomial> monomials)
    : m_(m), k_(k), monomials_(std::move(monomials)) {
    if (m < 1) throw InputError("basis: m must be >= 1");
    std::set<Monomial> seen;
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
        const Monomial& s = monomials_[i];
        if (s.dimension() != k)
            throw InputError("basis: monomial " + s.to_string() + " has " + std::to_string(s.dimension()) +
                             " variables, expected " + std::to_string(k));
        if (!s.is_reduced(m))
            throw InputError("basis: monomial " + s.to_string() + " is not reduced mod " + std::to_string(m));
        if (!seen.insert(s).second) throw InputError("basis: duplicate monomial " + s.to_string());
        if (s.is_constant() && i != 0) throw InputError("basis: the constant monomial must come first");
    }
}

bool MonomialBasis::contains(const Monomial& alpha) const {
    return std::find(monomials_.begin(), monomials_.end(), alpha) != monomials_.end();
}

std::string MonomialBasis::to_string() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < monomials_.size(); ++i) os << (i ? ", " : "") << monomials_[i].to_string();
    os << "}";
    return os.str();
}

namespace {

void check_compatible(const Design& design, const MonomialBasis& basis) {
    if (design.modulus() != basis.modulus() || design.dimension() != basis.dimension())
        throw InputError("basis (m=" + std::to_string(basis.modulus()) + ", k=" + std::to_string(basis.dimension()) +
                         ") does not match design (m=" + std::to_string(design.modulus()) +
                         ", k=" + std::to_string(design.dimension()) + ")");
}

}  // namespace

std::vector<CycNum> evaluation_vector(const Design& design, const Monomial& alpha) {
    std::vector<CycNum> v;
    v.reserve(design.size());
    for (int r : evaluation_residues(design, alpha)) v.push_back(root_power(design.modulus(), r));
    return v;
}

CycMatrix evaluation_matrix(const Design& design, const MonomialBasis& basis) {
    check_compatible(design, basis);
    CycMatrix x(design.modulus(), design.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto col = evaluation_vector(design, basis[j]);
        for (std::size_t i = 0; i < design.size(); ++i) x(i, j) = col[i];
    }
    return x;
}

CycMatrix evaluation_matrix(const Design& design, std::span<const Polynomial> basis) {
    const int m = design.modulus();
    CycMatrix x(m, design.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (const auto& term : basis[j]) {
            if (term.coeff.modulus() != m) throw InputError("polynomial coefficient modulus mismatch");
            const auto res = evaluation_residues(design, term.monomial);
            for (std::size_t i = 0; i < design.size(); ++i) x(i, j) += term.coeff.times_root(res[i]);
        }
    }
    return x;
}

std::size_t evaluation_rank(const Design& design, const MonomialBasis& basis) {
    return rank(evaluation_matrix(design, basis));
}

bool is_correct_pair(const Design& design, const MonomialBasis& basis) {
    check_compatible(design, basis);
    if (basis.size() != design.size()) return false;
    return evaluation_rank(design, basis) == design.size();
}

std::vector<Monomial> TermOrder::scan_sequence(int m, std::size_t k) const {
    std::vector<Monomial> seq;
    std::set<Monomial> seen;
    for (const auto& p : priority_) {
        if (p.dimension() != k) throw InputError("term order: monomial " + p.to_string() + " has wrong dimension");
        Monomial r = p.reduce(m);
        if (seen.insert(r).second) seq.push_back(std::move(r));
    }
    for (auto& r : reduced_monomials(m, k))
        if (seen.insert(r).second) seq.push_back(std::move(r));
    return seq;
}

MonomialBasis quotient_basis(const Design& design, const TermOrder& order) {
    const int m = design.modulus();
    const std::size_t k = design.dimension();
    IncrementalSpan span(m, design.size());
    std::vector<Monomial> chosen;
    for (const auto& alpha : order.scan_sequence(m, k)) {
        if (span.try_add(evaluation_vector(design, alpha))) chosen.push_back(alpha);
        if (span.full()) break;
    }
    if (!span.full())
        throw InvariantError("quotient_basis: reduced monomials did not span the functions on the design");
    // Keep the constant first when an explicit order scanned it later.
    auto one = std::find_if(chosen.begin(), chosen.end(), [](const Monomial& s) { return s.is_constant(); });
    if (one != chosen.end()) std::rotate(chosen.begin(), one, one + 1);
    return MonomialBasis(m, k, std::move(chosen));
}

}  // namespace omegacub
