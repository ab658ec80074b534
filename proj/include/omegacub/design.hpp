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

#ifndef OMEGACUB_DESIGN_HPP
#define OMEGACUB_DESIGN_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "omegacub/cyclo.hpp"

namespace omegacub {

/// A node of Omega_m^k stored by its residues: (w_{j_1}, ..., w_{j_k}) <-> (j_1, ..., j_k).
class Node {
   public:
    Node() = default;
    explicit Node(std::vector<int> residues) : residues_(std::move(residues)) {}

    std::size_t dimension() const noexcept { return residues_.size(); }
    int operator[](std::size_t i) const { return residues_[i]; }
    std::span<const int> residues() const noexcept { return residues_; }

    friend auto operator<=>(const Node&, const Node&) = default;

   private:
    std::vector<int> residues_;
};

/// Exponent vector alpha of z^alpha = z_1^{alpha_1} ... z_k^{alpha_k}.
class Monomial {
   public:
    Monomial() = default;
    explicit Monomial(std::vector<int> alpha);

    static Monomial one(std::size_t k) { return Monomial(std::vector<int>(k, 0)); }
    /// "1", "z2", "z1*z2^3"; k fixes the number of variables.
    static Monomial parse(std::string_view text, std::size_t k);

    std::size_t dimension() const noexcept { return alpha_.size(); }
    int operator[](std::size_t i) const { return alpha_[i]; }
    std::span<const int> exponents() const noexcept { return alpha_; }

    long long total_degree() const;
    bool is_constant() const;
    bool is_reduced(int m) const;

    /// [alpha]_m, componentwise.
    Monomial reduce(int m) const;
    /// The conjugate class ([m - alpha_1]_m, ..., [m - alpha_k]_m).
    Monomial conjugate_class(int m) const;

    friend Monomial operator+(const Monomial& a, const Monomial& b);

    std::string to_string() const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

   private:
    std::vector<int> alpha_;
};

/// Degree-lexicographic order with z_1 > z_2 > ... > z_k: true iff a precedes b
/// when scanning from the smallest term upwards (1, z_k, ..., z_1, z_k^2, ...).
bool deglex_less(const Monomial& a, const Monomial& b);

/// All reduced exponents of Z_m^k in ascending deglex order.
std::vector<Monomial> reduced_monomials(int m, std::size_t k);

/// Mixed-radix position of a reduced exponent (z_1 is the most significant digit).
std::size_t class_index(const Monomial& reduced, int m);
Monomial class_at(std::size_t index, int m, std::size_t k);

/// m^k, checked against overflow.
std::size_t full_factorial_size(int m, std::size_t k);

/// Residue r such that z^alpha(d) = w_r.
int evaluate_residue(const Monomial& alpha, const Node& d, int m);
/// z^alpha(d) = w_{[sum alpha_i j_i]_m}.
CycNum evaluate_monomial(const Monomial& alpha, const Node& d, int m);

/// A node set D in Omega_m^k. Node order is the input order and fixes the row
/// order of every evaluation matrix and weight vector.
class Design {
   public:
    Design(int m, std::size_t k, std::vector<Node> nodes);

    static Design full_factorial(int m, std::size_t k);

    int modulus() const noexcept { return m_; }
    std::size_t dimension() const noexcept { return k_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    const std::vector<Node>& nodes() const noexcept { return nodes_; }
    const Node& node(std::size_t i) const { return nodes_[i]; }

    bool contains(const Node& d) const;
    /// Checks that alpha has this design's number of variables.
    void check_monomial(const Monomial& alpha) const;

    friend bool operator==(const Design&, const Design&) = default;

   private:
    int m_;
    std::size_t k_;
    std::vector<Node> nodes_;
};

/// Residues of z^alpha over the design, in node order.
std::vector<int> evaluation_residues(const Design& design, const Monomial& alpha);

/// Counts of each residue r in evaluation_residues(); sum_d z^alpha(d) = sum_r counts[r] w^r.
std::vector<long long> residue_counts(const Design& design, const Monomial& alpha);

/// sum_{d in D} z^alpha(d), exactly.
CycNum node_sum(const Design& design, const Monomial& alpha);

/// Indicator polynomial f = sum_alpha b_alpha z^alpha of D over Omega_m^k, with
/// b_alpha = m^{-k} sum_{d in D} z^{conj(alpha)}(d).
class IndicatorFn {
   public:
    explicit IndicatorFn(const Design& design);

    int modulus() const noexcept { return m_; }
    std::size_t dimension() const noexcept { return k_; }
    std::size_t design_size() const noexcept { return n_; }

    /// b_{[alpha]_m}; alpha need not be reduced.
    const CycNum& coefficient(const Monomial& alpha) const;
    /// All coefficients, indexed by class_index().
    std::span<const CycNum> coefficients() const noexcept { return coeffs_; }

    /// f(d) for any d in Omega_m^k.
    CycNum evaluate(const Node& d) const;

   private:
    int m_;
    std::size_t k_, n_;
    std::vector<CycNum> coeffs_;
};

IndicatorFn indicator_coefficients(const Design& design);

/// Reduced exponents with b_alpha != 0, ascending deglex.
std::vector<Monomial> support(const IndicatorFn& f);

struct RegularityReport {
    bool regular = true;
    /// Every reduced alpha whose evaluation vector is neither constant nor
    /// orthogonal to 1_n, ascending deglex. Empty iff regular.
    std::vector<Monomial> witnesses;

    const Monomial* witness() const { return witnesses.empty() ? nullptr : &witnesses.front(); }
};

/// A fraction is regular when every [z^alpha(d)]_d is constant or sums to zero.
RegularityReport is_regular_fraction(const Design& design);

}  // namespace omegacub

#endif
