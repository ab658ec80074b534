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
#include <doctest.h>

#include <algorithm>
#include <complex>
#include <set>
#include <vector>

#include "gen.hpp"
#include "omegacub/cubature.hpp"
#include "omegacub/errors.hpp"

using namespace omegacub;

namespace {

Monomial M(std::vector<int> a) { return Monomial(std::move(a)); }

Design example1() {
    return Design(2, 4,
                  {Node({0, 0, 0, 0}), Node({0, 0, 1, 0}), Node({0, 1, 0, 1}), Node({0, 1, 1, 1}), Node({1, 0, 0, 0}),
                   Node({1, 1, 1, 0}), Node({1, 1, 1, 1}), Node({1, 0, 0, 1})});
}
MonomialBasis example1_basis() {
    return MonomialBasis(2, 4,
                         {M({0, 0, 0, 0}), M({1, 0, 0, 0}), M({0, 1, 0, 0}), M({0, 0, 1, 0}), M({0, 0, 0, 1}),
                          M({1, 1, 0, 0}), M({0, 0, 1, 1}), M({1, 0, 1, 1})});
}
Design example2() { return Design(4, 2, {Node({0, 0}), Node({1, 3}), Node({2, 1}), Node({3, 2})}); }
MonomialBasis example2_basis() { return MonomialBasis(4, 2, {M({0, 0}), M({0, 1}), M({1, 0}), M({0, 3})}); }
Design example3() { return Design(3, 2, {Node({0, 2}), Node({2, 1})}); }

CycNum frac(int m, long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return CycNum(m, r);
}

// sum_d w_d z^alpha(d), from the residues directly
CycNum node_rule(const CubatureRule& rule, const Monomial& a) {
    CycNum s(rule.design.modulus());
    for (std::size_t i = 0; i < rule.design.size(); ++i)
        s += rule.weights[i] * root_power(rule.design.modulus(), testgen::dot_residue(a, rule.design.node(i)));
    return s;
}

DiscreteMeasure random_measure(testgen::Rng& rng, int m, std::size_t k, bool probability) {
    const std::size_t total = testgen::ipow(m, k);
    const Design atoms = testgen::random_design(
        rng, m, k, static_cast<std::size_t>(testgen::uniform_int(rng, 1, static_cast<int>(std::min<std::size_t>(total, 12)))));
    std::vector<std::pair<Node, Rational>> mass;
    Rational sum = 0;
    for (const auto& d : atoms.nodes()) {
        Rational q(testgen::uniform_int(rng, 1, 6), testgen::uniform_int(rng, 1, 5));
        q.canonicalize();
        mass.emplace_back(d, q);
        sum += q;
    }
    if (probability)
        for (auto& [d, q] : mass) q /= sum;
    return DiscreteMeasure(m, k, mass);
}

}  // namespace

TEST_CASE("weights of the worked examples") {
    const GaussianMoments g;
    const CubatureRule r1 = compute_weights(example1(), example1_basis(), g);
    REQUIRE(r1.weights.size() == 8);
    for (const auto& w : r1.weights) CHECK(w == frac(2, 1, 8));
    CHECK(r1.equal_weights);

    const CubatureRule r2 = compute_weights(example2(), example2_basis(), g);
    for (const auto& w : r2.weights) CHECK(w == frac(4, 1, 4));
    CHECK(r2.equal_weights);

    const Design omega2 = Design::full_factorial(2, 1);
    const CubatureRule r3 =
        compute_weights(omega2, MonomialBasis(2, 1, {M({0}), M({1})}), DiscreteMeasure::uniform_on(omega2));
    CHECK(r3.weights == std::vector<CycNum>{frac(2, 1, 2), frac(2, 1, 2)});
}

TEST_CASE("incorrect pairs are rejected with the rank defect") {
    const Design shared(3, 2, {Node({1, 0}), Node({1, 2})});
    try {
        compute_weights(shared, MonomialBasis(3, 2, {M({0, 0}), M({1, 0})}), GaussianMoments());
        FAIL("expected IncorrectPairError");
    } catch (const IncorrectPairError& e) {
        CHECK(e.rank() == 1);
        CHECK(e.rank_defect() == 1);
        CHECK(std::string(e.what()).find("rank defect 1") != std::string::npos);
    }
    CHECK_THROWS_AS(compute_weights(example2(), MonomialBasis(4, 2, {M({0, 0})}), GaussianMoments()),
                    IncorrectPairError);
    CHECK_THROWS_AS(compute_weights(example2(), MonomialBasis(3, 2, {M({0, 0})}), GaussianMoments()), InputError);
}

TEST_CASE("float moments fall back to a floating solve") {
    const FloatMoments g([](const Monomial& a) { return std::complex<double>(a.is_constant() ? 1.0 : 0.0, 0.0); },
                         1e-10, true);
    const CubatureRule r = compute_weights(example2(), example2_basis(), g);
    CHECK_FALSE(r.exact);
    CHECK(r.residual < 1e-12);
    CHECK(r.equal_weights);
    for (const auto& w : r.approx_weights) CHECK(std::abs(w - 0.25) < 1e-12);
    CHECK(verify_exactness(r, g, M({0, 5})));
    CHECK_FALSE(verify_exactness(r, g, M({1, 1})));
    CHECK_THROWS_AS(rule_value(r, M({0, 0})), PreconditionError);
    CHECK_THROWS_AS(g.exact_moment(M({0, 0}), 4), PreconditionError);
}

TEST_CASE("exactness checks") {
    const GaussianMoments g;
    const CubatureRule r = compute_weights(example2(), example2_basis(), g);
    for (const auto& s : r.basis.monomials()) CHECK(verify_exactness(r, g, s));
    CHECK(verify_exactness(r, g, M({0, 0})));
    CHECK(verify_exactness(r, g, M({0, 5})));
    CHECK_FALSE(verify_exactness(r, g, M({1, 1})));
    // the rule gives (1/4) * sum_d z1 z2(d) = 4 b_(3,3) = 1/2
    CHECK(node_rule(r, M({1, 1})) == frac(4, 1, 2));
    CHECK(rule_value(r, M({1, 1})) == frac(4, 1, 2));
    CHECK(std::abs(rule_value_approx(r, M({1, 1})) - 0.5) < 1e-12);
}

TEST_CASE("membership in A") {
    const GaussianMoments g;
    const IndicatorFn f2(example2());
    for (const auto& a : reduced_monomials(4, 2)) CHECK(in_A(a, f2, g) == (a.is_constant() || f2.coefficient(a).is_zero()));
    for (const auto& a : reduced_monomials(3, 2)) CHECK(in_A(a, example3(), g) == a.is_constant());
    testgen::Rng rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        const auto sh = testgen::random_shape(rng, 4, 3, 10, 64);
        const Design D = testgen::random_design(rng, sh.m, sh.k, sh.n);
        const DiscreteMeasure mu = random_measure(rng, sh.m, sh.k, true);
        CHECK(in_A(Monomial::one(sh.k), D, mu));
        // uniform on D itself: every monomial is in A
        const DiscreteMeasure u = DiscreteMeasure::uniform_on(D);
        for (const auto& a : reduced_monomials(sh.m, sh.k)) CHECK(in_A(a, D, u));
    }
    CHECK_THROWS_AS(in_A(M({1}), example2(), g), InputError);
}

TEST_CASE("equal-weight search on the worked examples") {
    const GaussianMoments g;
    const auto S2 = equal_weight_basis_search(example2(), g);
    REQUIRE(S2.has_value());
    const IndicatorFn f2(example2());
    for (const auto& s : S2->monomials()) CHECK((s.is_constant() || f2.coefficient(s).is_zero()));
    CHECK(S2->monomials() == std::vector<Monomial>{M({0, 0}), M({0, 1}), M({1, 0}), M({0, 2})});
    const CubatureRule r = compute_weights(example2(), *S2, g);
    CHECK(r.equal_weights);
    for (const auto& w : r.weights) CHECK(w == frac(4, 1, 4));

    CHECK_FALSE(equal_weight_basis_search(example3(), g).has_value());
    CHECK(equal_weight_basis_search(example1(), g).has_value());
}

TEST_CASE("regular fractions: every correct basis gives equal weights") {
    const GaussianMoments g;
    // half fractions z1 z2 z3 = 1 and z1 z2 = 1 of Omega_2^3, and a quarter of Omega_4^2
    const std::vector<Design> designs = {
        Design(2, 3, {Node({0, 0, 0}), Node({0, 1, 1}), Node({1, 0, 1}), Node({1, 1, 0})}),
        Design(2, 3, {Node({0, 0, 0}), Node({0, 0, 1}), Node({1, 1, 0}), Node({1, 1, 1})}),
        Design(4, 2, {Node({0, 0}), Node({1, 3}), Node({2, 2}), Node({3, 1})}),
        Design::full_factorial(3, 2)};
    testgen::Rng rng(52);
    for (const auto& D : designs) {
        REQUIRE(is_regular_fraction(D).regular);
        CHECK(equal_weight_basis_search(D, g).has_value());
        auto classes = reduced_monomials(D.modulus(), D.dimension());
        for (int t = 0; t < 10; ++t) {
            std::shuffle(classes.begin(), classes.end(), rng);
            const MonomialBasis S = quotient_basis(D, TermOrder::explicit_list(classes));
            if (!S.contains(Monomial::one(D.dimension()))) continue;
            CHECK(compute_weights(D, S, g).equal_weights);
        }
    }
}

TEST_CASE("equal-weight equivalence on random designs") {
    testgen::Rng rng(53);
    int found = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const auto sh = testgen::random_shape(rng, 4, 3, 8, 64);
        const Design D = testgen::random_design(rng, sh.m, sh.k, sh.n);
        const IndicatorFn f(D);
        const GaussianMoments g;
        const DiscreteMeasure mu = random_measure(rng, sh.m, sh.k, true);
        for (const MomentProvider* mp : {static_cast<const MomentProvider*>(&g), static_cast<const MomentProvider*>(&mu)}) {
            std::vector<Monomial> A;
            for (const auto& a : reduced_monomials(sh.m, sh.k))
                if (in_A(a, f, *mp)) A.push_back(a);
            const auto S = equal_weight_basis_search(D, *mp);
            if (S) {
                ++found;
                for (const auto& s : S->monomials()) CHECK(std::find(A.begin(), A.end(), s) != A.end());
                CHECK(compute_weights(D, *S, *mp).equal_weights);
            }
            // any other greedy pick inside A also gives (1/n) 1_n
            std::shuffle(A.begin(), A.end(), rng);
            std::stable_partition(A.begin(), A.end(), [](const Monomial& a) { return a.is_constant(); });
            IncrementalSpan span(sh.m, sh.n);
            std::vector<Monomial> pick;
            for (const auto& a : A)
                if (!span.full() && span.try_add(evaluation_vector(D, a))) pick.push_back(a);
            CHECK(span.full() == S.has_value());
            if (span.full()) {
                const CubatureRule r = compute_weights(D, MonomialBasis(sh.m, sh.k, pick), *mp);
                CHECK(r.equal_weights);
                if (mp == &g) {
                    for (const auto& s : pick) CHECK((s.is_constant() || f.coefficient(s).is_zero()));
                }
            }
        }
    }
    CHECK(found > 0);
}

TEST_CASE("precision reports") {
    const GaussianMoments g;
    const CubatureRule r2 = compute_weights(example2(), example2_basis(), g);
    const PrecisionReport p2 = precision_basis_report(r2, g);
    std::set<Monomial> got;
    for (const auto& c : p2.members) got.insert(c.representative);
    CHECK(got == std::set<Monomial>{M({0, 0}), M({0, 1}), M({1, 0}), M({0, 2}), M({2, 0}), M({0, 3}), M({3, 0}),
                                    M({2, 2})});
    for (const auto& c : p2.members) CHECK(c.unbounded == !c.representative.is_constant());
    CHECK(p2.degree_unbounded);
    CHECK(p2.precision_degree == 4);

    const CubatureRule r1 = compute_weights(example1(), example1_basis(), g);
    const PrecisionReport p1 = precision_basis_report(r1, g);
    CHECK(p1.members.size() == 12);
    CHECK(p1.contains(M({0, 0, 0, 0})));
    CHECK_FALSE(p1.contains(M({1, 1, 0, 1})));

    const Design ff = Design::full_factorial(3, 2);
    const DiscreteMeasure u = DiscreteMeasure::uniform_on(ff);
    const PrecisionReport pf = precision_basis_report(compute_weights(ff, quotient_basis(ff), u), u);
    CHECK(pf.members.size() == 9);

    // unequal weights have no closed-form report
    const DiscreteMeasure skew(2, 1, {{Node({0}), Rational(1, 3)}, {Node({1}), Rational(2, 3)}});
    const CubatureRule rs = compute_weights(Design::full_factorial(2, 1), MonomialBasis(2, 1, {M({0}), M({1})}), skew);
    CHECK_FALSE(rs.equal_weights);
    CHECK_THROWS_AS(precision_basis_report(rs, skew), PreconditionError);
}

TEST_CASE("precision maximality and lifts") {
    const GaussianMoments g;
    for (const auto& [D, S] : {std::pair{example1(), example1_basis()}, std::pair{example2(), example2_basis()}}) {
        const CubatureRule r = compute_weights(D, S, g);
        const PrecisionReport p = precision_basis_report(r, g);
        for (const auto& a : reduced_monomials(D.modulus(), D.dimension())) {
            CHECK(verify_exactness(r, g, a) == p.contains(a));
            // a lift alpha + m * e_1
            std::vector<int> lift(a.exponents().begin(), a.exponents().end());
            lift[0] += D.modulus();
            CHECK(verify_exactness(r, g, Monomial(lift)) == (p.contains(a) && !a.is_constant()));
        }
    }
}

TEST_CASE("probability normalisation") {
    testgen::Rng rng(54);
    for (int trial = 0; trial < 30; ++trial) {
        const auto sh = testgen::random_shape(rng, 4, 3, 10, 64);
        const Design D = testgen::random_design(rng, sh.m, sh.k, sh.n);
        const DiscreteMeasure mu = random_measure(rng, sh.m, sh.k, true);
        const CubatureRule r = compute_weights(D, quotient_basis(D), mu);
        CycNum sum(sh.m);
        for (const auto& w : r.weights) sum += w;
        CHECK(sum == CycNum(sh.m, 1));
    }
}

TEST_CASE("weights do not depend on the choice of basis of the span") {
    testgen::Rng rng(55);
    for (int trial = 0; trial < 15; ++trial) {
        const auto sh = testgen::random_shape(rng, 4, 3, 8, 64);
        const Design D = testgen::random_design(rng, sh.m, sh.k, sh.n);
        const MonomialBasis S = quotient_basis(D);
        const DiscreteMeasure mu = random_measure(rng, sh.m, sh.k, false);
        const CubatureRule base = compute_weights(D, S, mu);
        // T = U S with U unit upper triangular times a random permutation
        for (int t = 0; t < 3; ++t) {
            std::vector<std::size_t> perm(sh.n);
            for (std::size_t i = 0; i < sh.n; ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<Polynomial> T(sh.n);
            for (std::size_t i = 0; i < sh.n; ++i) {
                T[i].push_back({CycNum(sh.m, 1), S[perm[i]]});
                for (std::size_t j = i + 1; j < sh.n; ++j)
                    T[i].push_back({CycNum(sh.m, testgen::uniform_int(rng, -3, 3)), S[perm[j]]});
            }
            CHECK(interpolatory_weights(D, T, mu) == base.weights);
        }
    }
}

TEST_CASE("mixed monomial exactness") {
    const GaussianMoments g;
    const CubatureRule r = compute_weights(example2(), example2_basis(), g);
    for (const auto& gamma : {M({0, 0}), M({1, 0}), M({0, 1}), M({1, 1}), M({3, 7})}) {
        const MixedExactness e = mixed_exactness_check(r, M({0, 1}), gamma, g);
        CHECK(e.alpha_exact);
        CHECK(e.conj_exact);
        CHECK(e.mixed_exact);
        CHECK(e.conj_mixed_exact);
    }
    const MixedExactness bad = mixed_exactness_check(r, M({1, 1}), M({2, 0}), g);
    CHECK_FALSE(bad.alpha_exact);
    CHECK(bad.consistent());
    const MixedExactness trivial = mixed_exactness_check(r, M({0, 0}), M({0, 0}), g);
    CHECK(trivial.alpha_exact);
    CHECK(trivial.consistent());
    // int |z1|^2 is not int 1 under the gaussian
    CHECK_THROWS_AS(mixed_exactness_check(r, M({0, 0}), M({1, 0}), g), PreconditionError);

    const FloatMoments fm([](const Monomial& a) { return std::complex<double>(a.is_constant() ? 1.0 : 0.0, 0.0); },
                          1e-10, true);
    const CubatureRule rf = compute_weights(example2(), example2_basis(), fm);
    CHECK_THROWS_AS(mixed_exactness_check(rf, M({0, 1}), M({1, 0}), fm), PreconditionError);
    CHECK(mixed_exactness_check(rf, M({0, 1}), M({1, 0}), fm, true).consistent());
    CHECK(mixed_exactness_check(rf, M({0, 1}), M({1, 0}), fm, true).alpha_exact);

    const DiscreteMeasure skew(2, 1, {{Node({0}), Rational(1, 3)}, {Node({1}), Rational(2, 3)}});
    const CubatureRule rs = compute_weights(Design::full_factorial(2, 1), MonomialBasis(2, 1, {M({0}), M({1})}), skew);
    CHECK_THROWS_AS(mixed_exactness_check(rs, M({1}), M({0}), skew), PreconditionError);
}

TEST_CASE("verify agrees with direct summation over atoms") {
    testgen::Rng rng(56);
    for (int trial = 0; trial < 20; ++trial) {
        const auto sh = testgen::random_shape(rng, 4, 3, 8, 64);
        const Design D = testgen::random_design(rng, sh.m, sh.k, sh.n);
        const DiscreteMeasure mu = random_measure(rng, sh.m, sh.k, true);
        const CubatureRule r = compute_weights(D, quotient_basis(D), mu);
        for (const auto& a : reduced_monomials(sh.m, sh.k)) {
            CycNum atoms(sh.m);
            for (const auto& [d, q] : mu.atoms()) atoms += root_power(sh.m, testgen::dot_residue(a, d)) * q;
            CHECK(verify_exactness(r, mu, a) == (node_rule(r, a) == atoms));
        }
    }
}

TEST_CASE("provenance names") {
    for (auto p : {Provenance::Explicit, Provenance::QuotientBasis, Provenance::EqualWeightSearch, Provenance::Loaded})
        CHECK(provenance_from_string(to_string(p)) == p);
    CHECK_THROWS_AS(provenance_from_string("guess"), InputError);
}
