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

#ifndef OMEGACUB_CUBATURE_HPP
#define OMEGACUB_CUBATURE_HPP

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "omegacub/cyclo.hpp"
#include "omegacub/design.hpp"
#include "omegacub/interp.hpp"
#include "omegacub/measures.hpp"

namespace omegacub {

/// How the basis of a rule was obtained.
enum class Provenance { Explicit, QuotientBasis, EqualWeightSearch, Loaded };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

/*
 * Interpolatory cubature rule (D, w) on Span(S).
 *
 * Weights are in node order. For exact moment providers `weights` holds the
 * exact values and `approx_weights` their decimal images; for floating-point
 * providers only `approx_weights` is meaningful and `residual` records
 * max |X^t w - moments|.
 */
struct CubatureRule {
    CubatureRule(Design d, MonomialBasis s) : design(std::move(d)), basis(std::move(s)) {}

    Design design;
    MonomialBasis basis;
    bool exact = true;
    std::vector<CycNum> weights;
    std::vector<std::complex<double>> approx_weights;
    double residual = 0.0;
    double tolerance = 0.0;
    bool equal_weights = false;
    Provenance provenance = Provenance::Explicit;
};

/// Solves X_{D,S}^t w = [int s]_{s in S}. Throws IncorrectPairError when
/// (D, Span(S)) is not correct, InvariantError if exact re-substitution fails.
CubatureRule compute_weights(const Design& design, const MonomialBasis& basis, const MomentProvider& mp,
                             Provenance provenance = Provenance::Explicit);

/// Weights for a basis of arbitrary polynomials (exact providers only). Two bases
/// of the same polynomial space give the same weights.
std::vector<CycNum> interpolatory_weights(const Design& design, std::span<const Polynomial> basis,
                                          const MomentProvider& mp);

/// sum_d w_d z^alpha(d), exactly; requires an exact rule.
CycNum rule_value(const CubatureRule& rule, const Monomial& alpha);
std::complex<double> rule_value_approx(const CubatureRule& rule, const Monomial& alpha);

/// R_{D,w}(z^alpha) == 0, exactly for exact rules, within tolerance otherwise.
bool verify_exactness(const CubatureRule& rule, const MomentProvider& mp, const Monomial& alpha);

/// int z^alpha = (m^k / n) b_{conj(alpha)}: membership of z^alpha in the set A
/// whose subsets are exactly the bases with equal weights.
bool in_A(const Monomial& alpha, const IndicatorFn& f, const MomentProvider& mp);
bool in_A(const Monomial& alpha, const Design& design, const MomentProvider& mp);

/*
 * Greedy search for a basis with weights (1/n) 1_n: scans the reduced classes
 * of A in the given order (the constant first when it belongs to A) and keeps a
 * monomial when its evaluation vector extends the rank. Returns nullopt once the
 * classes of A are exhausted without reaching n.
 */
std::optional<MonomialBasis> equal_weight_basis_search(const Design& design, const MomentProvider& mp,
                                                       const TermOrder& order = TermOrder::deglex());

struct PrecisionClass {
    Monomial representative;  // reduced
    bool unbounded = false;   // every lift alpha with [alpha]_m == representative is exact too
};

struct PrecisionReport {
    std::vector<PrecisionClass> members;  // ascending deglex
    long long precision_degree = -1;      // over reduced representatives
    bool degree_unbounded = false;

    bool contains(const Monomial& reduced) const;
};

/// Precision basis of an equal-weight rule: the reduced classes of A. Throws
/// PreconditionError for rules with unequal weights.
PrecisionReport precision_basis_report(const CubatureRule& rule, const MomentProvider& mp);

struct MixedExactness {
    bool alpha_exact = false;       // z^alpha
    bool conj_exact = false;        // conj(z)^alpha
    bool mixed_exact = false;       // z^{alpha+gamma} conj(z)^gamma
    bool conj_mixed_exact = false;  // conj(z)^{alpha+gamma} z^gamma

    bool consistent() const {
        return alpha_exact == conj_exact && alpha_exact == mixed_exact && alpha_exact == conj_mixed_exact;
    }
};

/*
 * Exactness of an equal-weight rule on z^alpha, conj(z)^alpha and the mixed
 * monomials z^{alpha+gamma} conj(z)^gamma, conj(z)^{alpha+gamma} z^gamma.
 * Requires int z^{alpha+gamma} conj(z)^gamma = int z^alpha: taken from the
 * provider when it knows it, otherwise the caller must assert it.
 */
MixedExactness mixed_exactness_check(const CubatureRule& rule, const Monomial& alpha, const Monomial& gamma,
                                     const MomentProvider& mp, bool hypothesis_asserted = false);

}  // namespace omegacub

#endif
