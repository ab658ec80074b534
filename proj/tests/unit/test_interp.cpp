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
#include <set>
#include <vector>

#include "gen.hpp"
#include "omegacub/errors.hpp"
#include "omegacub/interp.hpp"
#include "omegacub/linalg.hpp"

using namespace omegacub;

namespace {

Monomial M(std::vector<int> a) { return Monomial(std::move(a)); }

Design example2() { return Design(4, 2, {Node({0, 0}), Node({1, 3}), Node({2, 1}), Node({3, 2})}); }

MonomialBasis example2_basis() { return MonomialBasis(4, 2, {M({0, 0}), M({0, 1}), M({1, 0}), M({0, 3})}); }

}  // namespace

TEST_CASE("basis validation") {
    CHECK_THROWS_AS(MonomialBasis(4, 2, {M({0, 1}), M({0, 0})}), InputError);
    CHECK_THROWS_AS(MonomialBasis(4, 2, {M({0, 0}), M({0, 4})}), InputError);
    CHECK_THROWS_AS(MonomialBasis(4, 2, {M({0, 0}), M({0, 1}), M({0, 1})}), InputError);
    CHECK_THROWS_AS(MonomialBasis(4, 2, {M({0, 0, 1})}), InputError);
    CHECK_NOTHROW(MonomialBasis(4, 2, {M({0, 1}), M({1, 0})}));
    CHECK(example2_basis().to_string() == "{1, z2, z1, z2^3}");
}

TEST_CASE("evaluation matrices") {
    const Design D = example2();
    const CycMatrix ones = evaluation_matrix(D, MonomialBasis(4, 2, {M({0, 0})}));
    CHECK(ones.cols() == 1);
    for (std::size_t i = 0; i < D.size(); ++i) CHECK(ones(i, 0) == CycNum(4, 1));

    const CycMatrix X = evaluation_matrix(D, example2_basis());
    CHECK(X(1, 0) == CycNum(4, 1));
    CHECK(X(1, 1) == root_power(4, 3));
    CHECK(X(1, 2) == root_power(4, 1));
    CHECK(X(1, 3) == root_power(4, 1));

    // character table of the full factorial: X^* X = m^k I
    const Design ff = Design::full_factorial(3, 2);
    const MonomialBasis all(3, 2, reduced_monomials(3, 2));
    const CycMatrix C = evaluation_matrix(ff, all);
    for (std::size_t a = 0; a < 9; ++a)
        for (std::size_t b = 0; b < 9; ++b) {
            CycNum s(3);
            for (std::size_t i = 0; i < 9; ++i) s += C(i, a).conj() * C(i, b);
            CHECK(s == CycNum(3, a == b ? 9 : 0));
        }
    CHECK_THROWS_AS(evaluation_matrix(D, MonomialBasis(3, 2, {M({0, 0})})), InputError);
}

TEST_CASE("correct pairs") {
    const Design single(4, 2, {Node({2, 3})});
    CHECK(is_correct_pair(single, MonomialBasis(4, 2, {M({0, 0})})));
    CHECK(is_correct_pair(example2(), example2_basis()));
    const Design shared(3, 2, {Node({1, 0}), Node({1, 2})});
    CHECK_FALSE(is_correct_pair(shared, MonomialBasis(3, 2, {M({0, 0}), M({1, 0})})));
    CHECK(is_correct_pair(shared, MonomialBasis(3, 2, {M({0, 0}), M({0, 1})})));
    CHECK_FALSE(is_correct_pair(example2(), MonomialBasis(4, 2, {M({0, 0}), M({0, 1})})));
    CHECK(evaluation_rank(shared, MonomialBasis(3, 2, {M({0, 0}), M({1, 0})})) == 1);
}

TEST_CASE("quotient bases") {
    for (int m = 2; m <= 4; ++m) {
        const auto S = quotient_basis(Design::full_factorial(m, 2));
        CHECK(S.monomials() == reduced_monomials(m, 2));
    }
    CHECK(quotient_basis(Design(5, 3, {Node({1, 2, 3})})).monomials() == std::vector<Monomial>{M({0, 0, 0})});
    const Design ex3(3, 2, {Node({0, 2}), Node({2, 1})});
    const MonomialBasis S3 = quotient_basis(ex3);
    CHECK(S3.monomials() == std::vector<Monomial>{M({0, 0}), M({0, 1})});
    CHECK(is_correct_pair(ex3, S3));
    // z1 first when the explicit list says so
    const MonomialBasis T3 = quotient_basis(ex3, TermOrder::explicit_list({M({1, 0})}));
    CHECK(T3.monomials() == std::vector<Monomial>{M({0, 0}), M({1, 0})});
}

TEST_CASE("explicit order scan sequence") {
    const auto seq = TermOrder::explicit_list({M({2, 2}), M({0, 1})}).scan_sequence(3, 2);
    REQUIRE(seq.size() == 9);
    CHECK(seq[0] == M({2, 2}));
    CHECK(seq[1] == M({0, 1}));
    CHECK(seq[2] == M({0, 0}));
    CHECK(std::set<Monomial>(seq.begin(), seq.end()).size() == 9);
    CHECK_THROWS_AS(TermOrder::explicit_list({M({1})}).scan_sequence(3, 2), InputError);
}

TEST_CASE("quotient basis on random designs and orders") {
    testgen::Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const auto sh = testgen::random_shape(rng, 4, 4, 40, 256);
        const Design D = testgen::random_design(rng, sh.m, sh.k, sh.n);
        auto classes = reduced_monomials(sh.m, sh.k);
        std::shuffle(classes.begin(), classes.end(), rng);
        for (const TermOrder& order : {TermOrder::deglex(), TermOrder::explicit_list(classes)}) {
            const MonomialBasis S = quotient_basis(D, order);
            CHECK(S.size() == sh.n);
            if (S.contains(Monomial::one(sh.k))) CHECK(S[0].is_constant());
            CHECK(is_correct_pair(D, S));
            CHECK(testgen::float_rank(testgen::float_evaluation(D, S.monomials())) == sh.n);
        }
    }
    // one larger case, n = 256 over Omega_4^4
    const Design big = Design::full_factorial(4, 4);
    CHECK(quotient_basis(big).size() == 256);
}

TEST_CASE("exact rank equals float rank on random designs") {
    testgen::Rng rng(32);
    for (int trial = 0; trial < 150; ++trial) {
        const auto sh = testgen::random_shape(rng, 6, 3, 10, 216);
        const Design D = testgen::random_design(rng, sh.m, sh.k, sh.n);
        const auto cols = static_cast<std::size_t>(testgen::uniform_int(rng, 1, static_cast<int>(sh.n) + 2));
        std::set<Monomial> pick;
        while (pick.size() < std::min(cols, testgen::ipow(sh.m, sh.k))) pick.insert(testgen::random_reduced(rng, sh.m, sh.k));
        std::vector<Monomial> S(pick.begin(), pick.end());
        std::sort(S.begin(), S.end(), deglex_less);
        const MonomialBasis B(sh.m, sh.k, S);
        CHECK(evaluation_rank(D, B) == testgen::float_rank(testgen::float_evaluation(D, S)));
    }
}

TEST_CASE("linear algebra over Q(w)") {
    testgen::Rng rng(33);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = testgen::uniform_int(rng, 2, 8);
        const auto n = static_cast<std::size_t>(testgen::uniform_int(rng, 1, 5));
        CycMatrix A(m, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) A(i, j) = testgen::random_cyc(rng, m);
        std::vector<CycNum> x(n);
        for (auto& v : x) v = testgen::random_cyc(rng, m);
        const auto b = A.apply(x);
        const auto sol = solve(A, b);
        if (rank(A) == n) {
            REQUIRE(sol.has_value());
            CHECK(*sol == x);
        }
        CHECK(rank(A.transpose()) == rank(A));

        IncrementalSpan span(m, n);
        std::size_t added = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (span.try_add(A.column(j))) ++added;
        CHECK(added == rank(A));
        for (std::size_t j = 0; j < n; ++j) CHECK(span.contains(A.column(j)));
        CHECK(span.full() == (added == n));
    }
    CycMatrix Z(3, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) Z(i, j) = CycNum(3, 1);
    CHECK_FALSE(solve(Z, {CycNum(3, 1), CycNum(3)}).has_value());
}
