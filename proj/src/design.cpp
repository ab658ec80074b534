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

#include "omegacub/design.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <sstream>

#include "omegacub/errors.hpp"

namespace omegacub {

namespace {

int mod(long long x, int m) {
    long long r = x % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<int> alpha) : alpha_(std::move(alpha)) {
    for (int a : alpha_)
        if (a < 0) throw InputError("Monomial: exponents must be non-negative");
}

long long Monomial::total_degree() const {
    long long s = 0;
    for (int a : alpha_) s += a;
    return s;
}

bool Monomial::is_constant() const {
    return std::all_of(alpha_.begin(), alpha_.end(), [](int a) { return a == 0; });
}

bool Monomial::is_reduced(int m) const {
    return std::all_of(alpha_.begin(), alpha_.end(), [m](int a) { return a < m; });
}

Monomial Monomial::reduce(int m) const {
    std::vector<int> r(alpha_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod(alpha_[i], m);
    return Monomial(std::move(r));
}

Monomial Monomial::conjugate_class(int m) const {
    std::vector<int> r(alpha_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod(-static_cast<long long>(alpha_[i]), m);
    return Monomial(std::move(r));
}

Monomial operator+(const Monomial& a, const Monomial& b) {
    if (a.dimension() != b.dimension()) throw InputError("Monomial: dimension mismatch");
    std::vector<int> r(a.dimension());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.alpha_[i] + b.alpha_[i];
    return Monomial(std::move(r));
}

std::string Monomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < alpha_.size(); ++i) {
        if (alpha_[i] == 0) continue;
        if (!first) os << "*";
        os << "z" << (i + 1);
        if (alpha_[i] > 1) os << "^" << alpha_[i];
        first = false;
    }
    return first ? "1" : os.str();
}

Monomial Monomial::parse(std::string_view text, std::size_t k) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    auto fail = [&](const std::string& what) -> void {
        throw InputError("cannot parse monomial '" + std::string(text) + "': " + what);
    };
    std::vector<int> alpha(k, 0);
    if (s == "1") return Monomial(std::move(alpha));
    std::size_t pos = 0;
    auto number = [&]() {
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos || pos - start > 9) fail("expected a number");
        return std::stoi(s.substr(start, pos - start));
    };
    while (true) {
        if (pos >= s.size() || s[pos] != 'z') fail("expected 'z<index>'");
        ++pos;
        const int var = number();
        if (var < 1 || static_cast<std::size_t>(var) > k) fail("variable index out of range");
        int e = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            e = number();
        }
        alpha[static_cast<std::size_t>(var - 1)] += e;
        if (pos == s.size()) break;
        if (s[pos] != '*') fail("expected '*'");
        ++pos;
    }
    return Monomial(std::move(alpha));
}

bool deglex_less(const Monomial& a, const Monomial& b) {
    const auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(), b.exponents().begin(),
                                        b.exponents().end());
}

std::size_t full_factorial_size(int m, std::size_t k) {
    if (m < 1) throw InputError("modulus must be >= 1");
    std::size_t n = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (n > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(m))
            throw InputError("m^k overflows");
        n *= static_cast<std::size_t>(m);
    }
    return n;
}

std::size_t class_index(const Monomial& reduced, int m) {
    std::size_t idx = 0;
    for (int a : reduced.exponents()) {
        if (a < 0 || a >= m) throw InputError("class_index: exponent not reduced");
        idx = idx * static_cast<std::size_t>(m) + static_cast<std::size_t>(a);
    }
    return idx;
}

Monomial class_at(std::size_t index, int m, std::size_t k) {
    std::vector<int> alpha(k, 0);
    for (std::size_t i = k; i-- > 0;) {
        alpha[i] = static_cast<int>(index % static_cast<std::size_t>(m));
        index /= static_cast<std::size_t>(m);
    }
    return Monomial(std::move(alpha));
}

std::vector<Monomial> reduced_monomials(int m, std::size_t k) {
    const std::size_t total = full_factorial_size(m, k);
    std::vector<Monomial> out;
    out.reserve(total);
    for (std::size_t i = 0; i < total; ++i) out.push_back(class_at(i, m, k));
    std::sort(out.begin(), out.end(), deglex_less);
    return out;
}

int evaluate_residue(const Monomial& alpha, const Node& d, int m) {
    if (alpha.dimension() != d.dimension())
        throw InputError("monomial has " + std::to_string(alpha.dimension()) + " variables but node has " +
                         std::to_string(d.dimension()) + " coordinates");
    long long r = 0;
    for (std::size_t i = 0; i < d.dimension(); ++i) r = (r + static_cast<long long>(alpha[i] % m) * d[i]) % m;
    return mod(r, m);
}

CycNum evaluate_monomial(const Monomial& alpha, const Node& d, int m) {
    return root_power(m, evaluate_residue(alpha, d, m));
}

// ---------------------------------------------------------------------------
// Design

Design::Design(int m, std::size_t k, std::vector<Node> nodes) : m_(m), k_(k), nodes_(std::move(nodes)) {
    if (m < 1) throw InputError("design: m must be >= 1");
    if (k < 1) throw InputError("design: k must be >= 1");
    if (nodes_.empty()) throw InputError("design: at least one node is required");
    std::set<Node> seen;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Node& d = nodes_[i];
        if (d.dimension() != k)
            throw InputError("design: node " + std::to_string(i) + " has " + std::to_string(d.dimension()) +
                             " coordinates, expected " + std::to_string(k));
        for (int r : d.residues())
            if (r < 0 || r >= m)
                throw InputError("design: node " + std::to_string(i) + " has residue " + std::to_string(r) +
                                 " outside [0, " + std::to_string(m) + ")");
        if (!seen.insert(d).second) throw InputError("design: duplicate node at position " + std::to_string(i));
    }
}

Design Design::full_factorial(int m, std::size_t k) {
    const std::size_t total = full_factorial_size(m, k);
    std::vector<Node> nodes;
    nodes.reserve(total);
    for (std::size_t i = 0; i < total; ++i) {
        Monomial a = class_at(i, m, k);
        nodes.emplace_back(std::vector<int>(a.exponents().begin(), a.exponents().end()));
    }
    return Design(m, k, std::move(nodes));
}

bool Design::contains(const Node& d) const { return std::find(nodes_.begin(), nodes_.end(), d) != nodes_.end(); }

void Design::check_monomial(const Monomial& alpha) const {
    if (alpha.dimension() != k_)
        throw InputError("monomial " + alpha.to_string() + " has " + std::to_string(alpha.dimension()) +
                         " variables, design has k = " + std::to_string(k_));
}

std::vector<int> evaluation_residues(const Design& design, const Monomial& alpha) {
    design.check_monomial(alpha);
    std::vector<int> r;
    r.reserve(design.size());
    for (const auto& d : design.nodes()) r.push_back(evaluate_residue(alpha, d, design.modulus()));
    return r;
}

std::vector<long long> residue_counts(const Design& design, const Monomial& alpha) {
    std::vector<long long> counts(static_cast<std::size_t>(design.modulus()), 0);
    for (int r : evaluation_residues(design, alpha)) ++counts[static_cast<std::size_t>(r)];
    return counts;
}

CycNum node_sum(const Design& design, const Monomial& alpha) {
    return root_sum(design.modulus(), residue_counts(design, alpha));
}

// ---------------------------------------------------------------------------
// IndicatorFn

IndicatorFn::IndicatorFn(const Design& design) : m_(design.modulus()), k_(design.dimension()), n_(design.size()) {
    const std::size_t total = full_factorial_size(m_, k_);
    const Rational scale(1, static_cast<unsigned long>(total));
    coeffs_.reserve(total);
    for (std::size_t i = 0; i < total; ++i) {
        const Monomial alpha = class_at(i, m_, k_);
        coeffs_.push_back(node_sum(design, alpha.conjugate_class(m_)) * scale);
    }
}

const CycNum& IndicatorFn::coefficient(const Monomial& alpha) const {
    if (alpha.dimension() != k_) throw InputError("indicator: monomial dimension mismatch");
    return coeffs_[class_index(alpha.reduce(m_), m_)];
}

CycNum IndicatorFn::evaluate(const Node& d) const {
    if (d.dimension() != k_) throw InputError("indicator: node dimension mismatch");
    // Accumulate sum_alpha b_alpha w^{r(alpha)} in the group ring, reduce once.
    const auto mm = static_cast<std::size_t>(m_);
    std::vector<Rational> acc(mm, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const CycNum& b = coeffs_[i];
        if (b.is_zero()) continue;
        const auto r = static_cast<std::size_t>(evaluate_residue(class_at(i, m_, k_), d, m_));
        const auto c = b.coeffs();
        for (std::size_t j = 0; j < c.size(); ++j)
            if (c[j] != 0) acc[(j + r) % mm] += c[j];
    }
    return CycNum::from_group_ring(m_, acc);
}

IndicatorFn indicator_coefficients(const Design& design) { return IndicatorFn(design); }

std::vector<Monomial> support(const IndicatorFn& f) {
    std::vector<Monomial> out;
    const auto coeffs = f.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) out.push_back(class_at(i, f.modulus(), f.dimension()));
    std::sort(out.begin(), out.end(), deglex_less);
    return out;
}

RegularityReport is_regular_fraction(const Design& design) {
    RegularityReport report;
    const auto n = static_cast<long long>(design.size());
    for (const auto& alpha : reduced_monomials(design.modulus(), design.dimension())) {
        const auto counts = residue_counts(design, alpha);
        const bool constant = std::any_of(counts.begin(), counts.end(), [n](long long c) { return c == n; });
        if (constant) continue;
        if (root_sum(design.modulus(), counts).is_zero()) continue;
        report.regular = false;
        report.witnesses.push_back(alpha);
    }
    return report;
}

}  // namespace omegacub
