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

#include "omegacub/measures.hpp"

#include <cmath>
#include <set>

#include "omegacub/errors.hpp"

namespace omegacub {

// ---------------------------------------------------------------------------
// Discrete measures

DiscreteMeasure::DiscreteMeasure(int m, std::size_t k, std::vector<std::pair<Node, Rational>> atoms)
    : m_(m), k_(k), atoms_(std::move(atoms)) {
    if (m < 1 || k < 1) throw InputError("discrete measure: m and k must be >= 1");
    std::set<Node> seen;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        const Node& d = atoms_[i].first;
        if (d.dimension() != k) throw InputError("discrete measure: atom " + std::to_string(i) + " has wrong dimension");
        for (int r : d.residues())
            if (r < 0 || r >= m) throw InputError("discrete measure: atom " + std::to_string(i) + " residue out of range");
        if (!seen.insert(d).second) throw InputError("discrete measure: duplicate atom " + std::to_string(i));
    }
}

DiscreteMeasure DiscreteMeasure::uniform_on(const Design& design) {
    std::vector<std::pair<Node, Rational>> atoms;
    const Rational mass(1, static_cast<unsigned long>(design.size()));
    for (const auto& d : design.nodes()) atoms.emplace_back(d, mass);
    return DiscreteMeasure(design.modulus(), design.dimension(), std::move(atoms));
}

Rational DiscreteMeasure::total_mass() const {
    Rational s = 0;
    for (const auto& [d, w] : atoms_) s += w;
    return s;
}

CycNum discrete_moment(const DiscreteMeasure& mu, const Monomial& alpha) {
    if (alpha.dimension() != mu.dimension()) throw InputError("discrete_moment: monomial dimension mismatch");
    const int m = mu.modulus();
    std::vector<Rational> g(static_cast<std::size_t>(m), 0);
    for (const auto& [d, w] : mu.atoms()) g[static_cast<std::size_t>(evaluate_residue(alpha, d, m))] += w;
    return CycNum::from_group_ring(m, g);
}

CycNum DiscreteMeasure::exact_moment(const Monomial& alpha, int m) const {
    if (m != m_)
        throw InputError("discrete measure lives on Omega_" + std::to_string(m_) + ", requested modulus " +
                         std::to_string(m));
    return discrete_moment(*this, alpha);
}

std::complex<double> DiscreteMeasure::moment(const Monomial& alpha) const {
    return discrete_moment(*this, alpha).to_complex();
}

// ---------------------------------------------------------------------------
// Gaussian holomorphic moments

int gaussian_holomorphic_moment(const Monomial& alpha) { return alpha.is_constant() ? 1 : 0; }

CycNum GaussianMoments::exact_moment(const Monomial& alpha, int m) const {
    return CycNum(m, gaussian_holomorphic_moment(alpha));
}

std::complex<double> GaussianMoments::moment(const Monomial& alpha) const {
    return {static_cast<double>(gaussian_holomorphic_moment(alpha)), 0.0};
}

bool GaussianMoments::lift_invariant(const Monomial& reduced_alpha, int) const { return !reduced_alpha.is_constant(); }

// For alpha != 0 both sides vanish: the total exponent of z exceeds that of conj(z).
bool GaussianMoments::mixed_shift_invariant(const Monomial& alpha, const Monomial& gamma) const {
    return !alpha.is_constant() || gamma.is_constant();
}

// ---------------------------------------------------------------------------
// Float moments

FloatMoments::FloatMoments(Fn fn, double tolerance, bool probability, bool real)
    : fn_(std::move(fn)), tol_(tolerance), probability_(probability), real_(real) {
    if (!(tolerance > 0.0)) throw InputError("float moments: tolerance must be > 0");
}

CycNum FloatMoments::exact_moment(const Monomial&, int) const {
    throw PreconditionError("float moment provider has no exact moments");
}

// ---------------------------------------------------------------------------
// Gaussian specification

void validate_partition(const std::vector<std::vector<int>>& blocks, std::size_t p) {
    std::vector<bool> seen(p, false);
    for (std::size_t h = 0; h < blocks.size(); ++h) {
        if (blocks[h].empty()) throw InputError("partition: block " + std::to_string(h + 1) + " is empty");
        for (int j : blocks[h]) {
            if (j < 0 || static_cast<std::size_t>(j) >= p)
                throw InputError("partition: variable index " + std::to_string(j + 1) + " outside 1.." +
                                 std::to_string(p));
            if (seen[static_cast<std::size_t>(j)])
                throw InputError("partition: variable " + std::to_string(j + 1) + " appears twice");
            seen[static_cast<std::size_t>(j)] = true;
        }
    }
    for (std::size_t j = 0; j < p; ++j)
        if (!seen[j]) throw InputError("partition: variable " + std::to_string(j + 1) + " is not covered");
}

namespace {

constexpr double kSymTol = 1e-12;

void check_square(const std::vector<std::vector<double>>& a, std::size_t p, const char* what) {
    if (a.size() != p) throw InputError(std::string("gaussian: ") + what + " must be " + std::to_string(p) + "x" + std::to_string(p));
    for (const auto& row : a)
        if (row.size() != p) throw InputError(std::string("gaussian: ") + what + " must be square");
}

}  // namespace

GaussianSpec::GaussianSpec(std::vector<double> sigma2, std::vector<std::vector<double>> alpha,
                           std::vector<std::vector<double>> beta, std::vector<std::vector<int>> blocks)
    : sigma2_(std::move(sigma2)), alpha_(std::move(alpha)), beta_(std::move(beta)), blocks_(std::move(blocks)) {
    const std::size_t p = sigma2_.size();
    if (p == 0) throw InputError("gaussian: p must be >= 1");
    for (double s : sigma2_)
        if (!(s > 0.0) || !std::isfinite(s)) throw InputError("gaussian: variances must be positive");
    check_square(alpha_, p, "alpha");
    check_square(beta_, p, "beta");
    validate_partition(blocks_, p);

    sigma_ = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p));
    for (std::size_t j = 0; j < p; ++j) {
        if (std::abs(alpha_[j][j]) > kSymTol || std::abs(beta_[j][j]) > kSymTol)
            throw InputError("gaussian: alpha and beta must have zero diagonals");
        sigma_(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = sigma2_[j];
        for (std::size_t k = j + 1; k < p; ++k) {
            if (std::abs(alpha_[j][k] - alpha_[k][j]) > kSymTol) throw InputError("gaussian: alpha must be symmetric");
            if (std::abs(beta_[j][k] + beta_[k][j]) > kSymTol) throw InputError("gaussian: beta must be antisymmetric");
            const std::complex<double> s(alpha_[j][k], beta_[j][k]);
            sigma_(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = s;
            sigma_(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = std::conj(s);
        }
    }

    std::vector<std::size_t> block_of(p);
    for (std::size_t h = 0; h < blocks_.size(); ++h)
        for (int j : blocks_[h]) block_of[static_cast<std::size_t>(j)] = h;
    for (std::size_t j = 0; j < p; ++j)
        for (std::size_t k = 0; k < p; ++k)
            if (block_of[j] != block_of[k] && std::abs(sigma_(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k))) > 0.0)
                throw InputError("gaussian: covariance between z" + std::to_string(j + 1) + " and z" +
                                 std::to_string(k + 1) + " must vanish across independence blocks");

    const auto n = static_cast<Eigen::Index>(p);
    const Eigen::MatrixXd re = sigma_.real();
    const Eigen::MatrixXd im = sigma_.imag();
    real_cov_.resize(2 * n, 2 * n);
    real_cov_ << re, -im, im, re;
    real_cov_ *= 0.5;

    Eigen::LLT<Eigen::MatrixXd> llt(real_cov_);
    if (llt.info() != Eigen::Success) throw InputError("gaussian: covariance is not positive definite");
}

GaussianSpec GaussianSpec::standard(std::size_t p) {
    std::vector<std::vector<int>> blocks;
    for (std::size_t j = 0; j < p; ++j) blocks.push_back({static_cast<int>(j)});
    const std::vector<std::vector<double>> zero(p, std::vector<double>(p, 0.0));
    return GaussianSpec(std::vector<double>(p, 1.0), zero, zero, std::move(blocks));
}

NullMomentResult gaussian_null_moment_predicate(const MixedExponent& e, const std::vector<std::vector<int>>& blocks) {
    validate_partition(blocks, e.size());
    for (const auto& [n, m] : e)
        if (n < 0 || m < 0) throw InputError("mixed exponent: entries must be non-negative");
    for (std::size_t h = 0; h < blocks.size(); ++h) {
        long long holo = 0, anti = 0;
        for (int j : blocks[h]) {
            holo += e[static_cast<std::size_t>(j)].first;
            anti += e[static_cast<std::size_t>(j)].second;
        }
        if (holo != anti) return {NullMoment::ProvablyZero, h};
    }
    return {NullMoment::Unknown, std::nullopt};
}

NullMomentResult gaussian_null_moment_predicate(const MixedExponent& e, const GaussianSpec& spec) {
    if (e.size() != spec.dimension())
        throw InputError("mixed exponent has " + std::to_string(e.size()) + " pairs, gaussian has p = " +
                         std::to_string(spec.dimension()));
    return gaussian_null_moment_predicate(e, spec.blocks());
}

// ---------------------------------------------------------------------------
// Sampling

GaussianSampler::GaussianSampler(const GaussianSpec& spec, std::uint64_t seed)
    : p_(spec.dimension()), rng_(seed), scratch_(2 * static_cast<Eigen::Index>(spec.dimension())),
      xy_(2 * static_cast<Eigen::Index>(spec.dimension())) {
    Eigen::LLT<Eigen::MatrixXd> llt(spec.real_covariance());
    if (llt.info() != Eigen::Success) throw InputError("gaussian sampler: covariance is not positive definite");
    chol_ = llt.matrixL();
}

std::vector<std::complex<double>> GaussianSampler::next() {
    std::vector<std::complex<double>> z(p_);
    next(z);
    return z;
}

void GaussianSampler::next(std::vector<std::complex<double>>& z) {
    for (Eigen::Index i = 0; i < scratch_.size(); ++i) scratch_(i) = normal_(rng_);
    xy_.noalias() = chol_.triangularView<Eigen::Lower>() * scratch_;
    z.resize(p_);
    const auto n = static_cast<Eigen::Index>(p_);
    for (Eigen::Index j = 0; j < n; ++j) z[static_cast<std::size_t>(j)] = {xy_(j), xy_(n + j)};
}

double MonteCarloEstimate::se() const { return std::hypot(se_re, se_im); }

MonteCarloEstimate mc_estimate_moment(GaussianSampler& sampler, const MixedExponent& e, std::size_t samples) {
    if (samples == 0) throw InputError("mc_estimate_moment: need at least one sample");
    if (e.size() != sampler.dimension()) throw InputError("mc_estimate_moment: exponent dimension mismatch");
    // Welford updates on the real and imaginary parts.
    double mean_re = 0, mean_im = 0, m2_re = 0, m2_im = 0;
    std::vector<std::complex<double>> z;
    for (std::size_t t = 1; t <= samples; ++t) {
        sampler.next(z);
        std::complex<double> v{1.0, 0.0};
        for (std::size_t j = 0; j < e.size(); ++j) {
            for (int a = 0; a < e[j].first; ++a) v *= z[j];
            const auto zc = std::conj(z[j]);
            for (int b = 0; b < e[j].second; ++b) v *= zc;
        }
        const double dr = v.real() - mean_re, di = v.imag() - mean_im;
        mean_re += dr / static_cast<double>(t);
        mean_im += di / static_cast<double>(t);
        m2_re += dr * (v.real() - mean_re);
        m2_im += di * (v.imag() - mean_im);
    }
    MonteCarloEstimate est;
    est.mean = {mean_re, mean_im};
    est.samples = samples;
    if (samples > 1) {
        const auto nn = static_cast<double>(samples);
        est.se_re = std::sqrt(m2_re / (nn - 1.0) / nn);
        est.se_im = std::sqrt(m2_im / (nn - 1.0) / nn);
    }
    return est;
}

}  // namespace omegacub
