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

#include "omegacub/cubature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "omegacub/errors.hpp"
#include "omegacub/linalg.hpp"

namespace omegacub {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Explicit: return "explicit";
        case Provenance::QuotientBasis: return "quotient_basis";
        case Provenance::EqualWeightSearch: return "equal_weight_search";
        case Provenance::Loaded: return "loaded";
    }
    return "unknown";
}

Provenance provenance_from_string(const std::string& s) {
    if (s == "explicit") return Provenance::Explicit;
    if (s == "quotient_basis") return Provenance::QuotientBasis;
    if (s == "equal_weight_search") return Provenance::EqualWeightSearch;
    if (s == "loaded") return Provenance::Loaded;
    throw InputError("unknown provenance '" + s + "'");
}

namespace {

std::vector<CycNum> exact_moments(const MonomialBasis& basis, const MomentProvider& mp) {
    std::vector<CycNum> mu;
    mu.reserve(basis.size());
    for (const auto& s : basis.monomials()) mu.push_back(mp.exact_moment(s, basis.modulus()));
    return mu;
}

void check_dimensions(const Design& design, const MonomialBasis& basis) {
    if (design.modulus() != basis.modulus() || design.dimension() != basis.dimension())
        throw InputError("basis does not match the design's m and k");
}

}  // namespace

CubatureRule compute_weights(const Design& design, const MonomialBasis& basis, const MomentProvider& mp,
                             Provenance provenance) {
    check_dimensions(design, basis);
    const std::size_t n = design.size();
    const CycMatrix x = evaluation_matrix(design, basis);
    if (basis.size() != n) throw IncorrectPairError(n, basis.size(), rank(x));

    CubatureRule rule{design, basis};
    rule.provenance = provenance;
    rule.exact = mp.is_exact();
    rule.tolerance = mp.tolerance();

    if (mp.is_exact()) {
        const CycMatrix xt = x.transpose();
        const auto mu = exact_moments(basis, mp);
        auto w = solve(xt, mu);
        if (!w) throw IncorrectPairError(n, basis.size(), rank(x));
        if (xt.apply(*w) != mu) throw InvariantError("compute_weights: exact re-substitution failed");
        rule.weights = std::move(*w);
        const CycNum uniform(design.modulus(), Rational(1, static_cast<unsigned long>(n)));
        rule.equal_weights = std::all_of(rule.weights.begin(), rule.weights.end(),
                                         [&](const CycNum& wd) { return wd == uniform; });
        for (const auto& wd : rule.weights) rule.approx_weights.push_back(wd.to_complex());
        return rule;
    }

    // Correctness of the pair is still decided exactly.
    const std::size_t r = rank(x);
    if (r < n) throw IncorrectPairError(n, basis.size(), r);
    const auto nn = static_cast<Eigen::Index>(n);
    Eigen::MatrixXcd xt(nn, nn);
    Eigen::VectorXcd mu(nn);
    for (Eigen::Index i = 0; i < nn; ++i) {
        mu(i) = mp.moment(basis[static_cast<std::size_t>(i)]);
        for (Eigen::Index j = 0; j < nn; ++j)
            xt(i, j) = x(static_cast<std::size_t>(j), static_cast<std::size_t>(i)).to_complex();
    }
    const Eigen::VectorXcd w = xt.fullPivLu().solve(mu);
    rule.residual = (xt * w - mu).cwiseAbs().maxCoeff();
    rule.approx_weights.assign(w.data(), w.data() + nn);
    const double inv_n = 1.0 / static_cast<double>(n);
    rule.equal_weights = std::all_of(rule.approx_weights.begin(), rule.approx_weights.end(),
                                     [&](const auto& wd) { return std::abs(wd - inv_n) <= mp.tolerance(); });
    return rule;
}

std::vector<CycNum> interpolatory_weights(const Design& design, std::span<const Polynomial> basis,
                                          const MomentProvider& mp) {
    if (!mp.is_exact()) throw PreconditionError("interpolatory_weights: requires an exact moment provider");
    const int m = design.modulus();
    const CycMatrix x = evaluation_matrix(design, basis);
    if (basis.size() != design.size()) throw IncorrectPairError(design.size(), basis.size(), rank(x));
    std::vector<CycNum> mu;
    for (const auto& p : basis) {
        CycNum acc(m);
        for (const auto& term : p) acc += term.coeff * mp.exact_moment(term.monomial, m);
        mu.push_back(std::move(acc));
    }
    auto w = solve(x.transpose(), mu);
    if (!w) throw IncorrectPairError(design.size(), basis.size(), rank(x));
    return std::move(*w);
}

CycNum rule_value(const CubatureRule& rule, const Monomial& alpha) {
    if (!rule.exact) throw PreconditionError("rule_value: rule has no exact weights");
    const auto res = evaluation_residues(rule.design, alpha);
    CycNum acc(rule.design.modulus());
    for (std::size_t i = 0; i < res.size(); ++i) acc += rule.weights[i].times_root(res[i]);
    return acc;
}

std::complex<double> rule_value_approx(const CubatureRule& rule, const Monomial& alpha) {
    const auto res = evaluation_residues(rule.design, alpha);
    const int m = rule.design.modulus();
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < res.size(); ++i) acc += rule.approx_weights[i] * root_power(m, res[i]).to_complex();
    return acc;
}

bool verify_exactness(const CubatureRule& rule, const MomentProvider& mp, const Monomial& alpha) {
    if (rule.exact && mp.is_exact()) return rule_value(rule, alpha) == mp.exact_moment(alpha, rule.design.modulus());
    const double tol = std::max(rule.tolerance, mp.tolerance());
    return std::abs(rule_value_approx(rule, alpha) - mp.moment(alpha)) <= tol;
}

bool in_A(const Monomial& alpha, const IndicatorFn& f, const MomentProvider& mp) {
    const int m = f.modulus();
    const std::size_t total = full_factorial_size(m, f.dimension());
    Rational scale(static_cast<unsigned long>(total), static_cast<unsigned long>(f.design_size()));
    scale.canonicalize();
    const CycNum target = f.coefficient(alpha.conjugate_class(m)) * scale;
    if (mp.is_exact()) return mp.exact_moment(alpha, m) == target;
    return std::abs(mp.moment(alpha) - target.to_complex()) <= mp.tolerance();
}

bool in_A(const Monomial& alpha, const Design& design, const MomentProvider& mp) {
    design.check_monomial(alpha);
    return in_A(alpha, IndicatorFn(design), mp);
}

std::optional<MonomialBasis> equal_weight_basis_search(const Design& design, const MomentProvider& mp,
                                                       const TermOrder& order) {
    const int m = design.modulus();
    const std::size_t k = design.dimension();
    const IndicatorFn f(design);

    std::vector<Monomial> candidates;
    for (auto& alpha : order.scan_sequence(m, k))
        if (in_A(alpha, f, mp)) candidates.push_back(std::move(alpha));
    auto one = std::find_if(candidates.begin(), candidates.end(), [](const Monomial& a) { return a.is_constant(); });
    if (one != candidates.end()) std::rotate(candidates.begin(), one, one + 1);

    IncrementalSpan span(m, design.size());
    std::vector<Monomial> chosen;
    for (const auto& alpha : candidates) {
        if (span.try_add(evaluation_vector(design, alpha))) chosen.push_back(alpha);
        if (span.full()) break;
    }
    if (!span.full()) return std::nullopt;

    MonomialBasis basis(m, k, std::move(chosen));
    if (!compute_weights(design, basis, mp).equal_weights)
        throw InvariantError("equal_weight_basis_search: basis within A did not give equal weights");
    return basis;
}

bool PrecisionReport::contains(const Monomial& reduced) const {
    return std::any_of(members.begin(), members.end(),
                       [&](const PrecisionClass& c) { return c.representative == reduced; });
}

PrecisionReport precision_basis_report(const CubatureRule& rule, const MomentProvider& mp) {
    if (!rule.equal_weights)
        throw PreconditionError("precision_basis_report: only available for rules with equal weights");
    const int m = rule.design.modulus();
    const IndicatorFn f(rule.design);
    PrecisionReport report;
    for (const auto& alpha : reduced_monomials(m, rule.design.dimension())) {
        if (!in_A(alpha, f, mp)) continue;
        const bool unbounded = mp.lift_invariant(alpha, m);
        report.members.push_back({alpha, unbounded});
        report.precision_degree = std::max(report.precision_degree, alpha.total_degree());
        report.degree_unbounded = report.degree_unbounded || unbounded;
    }
    return report;
}

MixedExactness mixed_exactness_check(const CubatureRule& rule, const Monomial& alpha, const Monomial& gamma,
                                     const MomentProvider& mp, bool hypothesis_asserted) {
    if (!rule.equal_weights) throw PreconditionError("mixed_exactness_check: rule must have equal weights");
    if (!mp.is_real()) throw PreconditionError("mixed_exactness_check: conjugate claims need a real measure");
    if (!mp.mixed_shift_invariant(alpha, gamma) && !hypothesis_asserted)
        throw PreconditionError("mixed_exactness_check: int z^(alpha+gamma) conj(z)^gamma = int z^alpha is not "
                                "known for this measure");
    const Design& design = rule.design;
    const int m = design.modulus();
    const auto shifted = evaluation_residues(design, alpha + gamma);
    const auto base = evaluation_residues(design, gamma);

    MixedExactness out;
    out.alpha_exact = verify_exactness(rule, mp, alpha);
    if (rule.exact && mp.is_exact()) {
        const CycNum target = mp.exact_moment(alpha, m);
        const CycNum target_conj = target.conj();
        const auto plain = evaluation_residues(design, alpha);
        CycNum conj_plain(m), mixed(m), conj_mixed(m);
        for (std::size_t i = 0; i < design.size(); ++i) {
            const CycNum& w = rule.weights[i];
            conj_plain += w.times_root(-static_cast<long long>(plain[i]));
            mixed += w.times_root(shifted[i] - base[i]);
            conj_mixed += w.times_root(base[i] - shifted[i]);
        }
        out.conj_exact = conj_plain == target_conj;
        out.mixed_exact = mixed == target;
        out.conj_mixed_exact = conj_mixed == target_conj;
        return out;
    }
    const double tol = std::max(rule.tolerance, mp.tolerance());
    const std::complex<double> target = mp.moment(alpha);
    std::complex<double> conj_plain{0, 0}, mixed{0, 0}, conj_mixed{0, 0};
    for (std::size_t i = 0; i < design.size(); ++i) {
        const auto w = rule.approx_weights[i];
        conj_plain += w * root_power(m, -evaluate_residue(alpha, design.node(i), m)).to_complex();
        mixed += w * root_power(m, shifted[i] - base[i]).to_complex();
        conj_mixed += w * root_power(m, base[i] - shifted[i]).to_complex();
    }
    out.conj_exact = std::abs(conj_plain - std::conj(target)) <= tol;
    out.mixed_exact = std::abs(mixed - target) <= tol;
    out.conj_mixed_exact = std::abs(conj_mixed - std::conj(target)) <= tol;
    return out;
}

}  // namespace omegacub
