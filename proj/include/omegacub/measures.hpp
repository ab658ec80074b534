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

#ifndef OMEGACUB_MEASURES_HPP
#define OMEGACUB_MEASURES_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include <boost/random/normal_distribution.hpp>
#include <string>
#include <utility>
#include <vector>

#include "omegacub/cyclo.hpp"
#include "omegacub/design.hpp"

namespace omegacub {

/*
 * Source of the moments int z^alpha d(lambda) consumed by the weight solver.
 *
 * A complex measure with a density g with respect to a positive measure mu
 * integrates as int f g d(mu), so every provider here only has to know how to
 * integrate monomials.
 */
class MomentProvider {
   public:
    virtual ~MomentProvider() = default;

    virtual std::string name() const = 0;
    /// Moments are available exactly in Q(w_m).
    virtual bool is_exact() const = 0;
    /// The moment of the constant monomial is 1.
    virtual bool is_probability() const = 0;
    /// Real-valued measure, so that int conj(f) = conj(int f).
    virtual bool is_real() const { return true; }

    /// Exact moment as an element of Q(w_m). Throws PreconditionError for
    /// providers that are not exact.
    virtual CycNum exact_moment(const Monomial& alpha, int m) const = 0;
    virtual std::complex<double> moment(const Monomial& alpha) const = 0;
    /// Absolute tolerance for floating-point comparisons (0 for exact providers).
    virtual double tolerance() const { return 0.0; }

    /// Whether int z^{alpha + m*beta} = int z^alpha for every beta >= 0.
    virtual bool lift_invariant(const Monomial& reduced_alpha, int m) const = 0;
    /// Whether int z^{alpha+gamma} conj(z)^gamma = int z^alpha is known to hold.
    virtual bool mixed_shift_invariant(const Monomial& alpha, const Monomial& gamma) const = 0;
};

/// Finitely many atoms of Omega_m^k with rational masses.
class DiscreteMeasure final : public MomentProvider {
   public:
    DiscreteMeasure(int m, std::size_t k, std::vector<std::pair<Node, Rational>> atoms);

    /// Mass 1/n on every node of the design.
    static DiscreteMeasure uniform_on(const Design& design);

    int modulus() const noexcept { return m_; }
    std::size_t dimension() const noexcept { return k_; }
    const std::vector<std::pair<Node, Rational>>& atoms() const noexcept { return atoms_; }
    Rational total_mass() const;

    std::string name() const override { return "discrete"; }
    bool is_exact() const override { return true; }
    bool is_probability() const override { return total_mass() == 1; }
    CycNum exact_moment(const Monomial& alpha, int m) const override;
    std::complex<double> moment(const Monomial& alpha) const override;
    bool lift_invariant(const Monomial&, int) const override { return true; }
    /// |z^gamma| = 1 on every atom.
    bool mixed_shift_invariant(const Monomial&, const Monomial&) const override { return true; }

   private:
    int m_;
    std::size_t k_;
    std::vector<std::pair<Node, Rational>> atoms_;
};

/// sum over atoms of mass * z^alpha(atom).
CycNum discrete_moment(const DiscreteMeasure& mu, const Monomial& alpha);

/// int z^alpha dnu for a zero-mean complex Gaussian nu: 1 if alpha = 0, else 0.
int gaussian_holomorphic_moment(const Monomial& alpha);

/// Holomorphic moments of any zero-mean complex Gaussian; they do not depend on
/// the covariance.
class GaussianMoments final : public MomentProvider {
   public:
    std::string name() const override { return "gaussian"; }
    bool is_exact() const override { return true; }
    bool is_probability() const override { return true; }
    CycNum exact_moment(const Monomial& alpha, int m) const override;
    std::complex<double> moment(const Monomial& alpha) const override;
    bool lift_invariant(const Monomial& reduced_alpha, int m) const override;
    bool mixed_shift_invariant(const Monomial& alpha, const Monomial& gamma) const override;
};

/// Moments supplied as floating-point values, compared with a tolerance.
class FloatMoments final : public MomentProvider {
   public:
    using Fn = std::function<std::complex<double>(const Monomial&)>;
    FloatMoments(Fn fn, double tolerance, bool probability, bool real = true);

    std::string name() const override { return "float"; }
    bool is_exact() const override { return false; }
    bool is_probability() const override { return probability_; }
    bool is_real() const override { return real_; }
    CycNum exact_moment(const Monomial& alpha, int m) const override;
    std::complex<double> moment(const Monomial& alpha) const override { return fn_(alpha); }
    double tolerance() const override { return tol_; }
    bool lift_invariant(const Monomial&, int) const override { return false; }
    bool mixed_shift_invariant(const Monomial&, const Monomial&) const override { return false; }

   private:
    Fn fn_;
    double tol_;
    bool probability_, real_;
};

/*
 * Zero-mean p-variate complex Gaussian Z = X + iY.
 *
 * Sigma_jj = sigma2_j, Sigma_jk = alpha_jk + i beta_jk (j < k) and the conjugate
 * below the diagonal; alpha must be symmetric and beta antisymmetric. The real
 * vector (X, Y) then has covariance 1/2 [[Re Sigma, -Im Sigma], [Im Sigma, Re Sigma]]:
 * E(X_j X_j) = E(Y_j Y_j) = sigma2_j / 2, E(X_j Y_j) = 0,
 * E(X_j X_k) = E(Y_j Y_k) = alpha_jk / 2, E(X_j Y_k) = -E(X_k Y_j).
 *
 * Blocks (0-based variable indices) partition {0..p-1} into mutually independent
 * groups, so Sigma must vanish across blocks. The density
 * exp(-conj(z)^t Sigma^{-1} z) / (pi^p det Sigma) is never integrated numerically.
 */
class GaussianSpec {
   public:
    GaussianSpec(std::vector<double> sigma2, std::vector<std::vector<double>> alpha,
                 std::vector<std::vector<double>> beta, std::vector<std::vector<int>> blocks);

    /// Independent standard components: Sigma = I, singleton blocks.
    static GaussianSpec standard(std::size_t p);

    std::size_t dimension() const noexcept { return sigma2_.size(); }
    const std::vector<double>& sigma2() const noexcept { return sigma2_; }
    const std::vector<std::vector<double>>& alpha() const noexcept { return alpha_; }
    const std::vector<std::vector<double>>& beta() const noexcept { return beta_; }
    const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }

    /// Sigma = E(Z conj(Z)^t).
    const Eigen::MatrixXcd& covariance() const noexcept { return sigma_; }
    /// Covariance of (X_1..X_p, Y_1..Y_p).
    const Eigen::MatrixXd& real_covariance() const noexcept { return real_cov_; }

   private:
    std::vector<double> sigma2_;
    std::vector<std::vector<double>> alpha_, beta_;
    std::vector<std::vector<int>> blocks_;
    Eigen::MatrixXcd sigma_;
    Eigen::MatrixXd real_cov_;
};

/// Exponents (n_j, m_j) of z_j^{n_j} conj(z_j)^{m_j}, j = 1..p.
using MixedExponent = std::vector<std::pair<int, int>>;

enum class NullMoment { ProvablyZero, Unknown };

struct NullMomentResult {
    NullMoment verdict = NullMoment::Unknown;
    /// Index of the first block with sum n_j != sum m_j, when ProvablyZero.
    std::optional<std::size_t> block;
};

/// Throws InputError unless blocks partition {0, ..., p-1}.
void validate_partition(const std::vector<std::vector<int>>& blocks, std::size_t p);

/// ProvablyZero iff some independence block has sum n_j != sum m_j. This is a
/// sufficient condition only, so the answer is never "nonzero".
NullMomentResult gaussian_null_moment_predicate(const MixedExponent& e, const std::vector<std::vector<int>>& blocks);
NullMomentResult gaussian_null_moment_predicate(const MixedExponent& e, const GaussianSpec& spec);

/// Seeded stream of complex Gaussian vectors. Not thread-safe; use one
/// instance per thread with independent seeds.
class GaussianSampler {
   public:
    GaussianSampler(const GaussianSpec& spec, std::uint64_t seed);

    std::size_t dimension() const noexcept { return p_; }
    std::vector<std::complex<double>> next();
    /// Same draw as next(), written into z.
    void next(std::vector<std::complex<double>>& z);

   private:
    std::size_t p_;
    Eigen::MatrixXd chol_;
    std::mt19937_64 rng_;
    boost::random::normal_distribution<double> normal_{0.0, 1.0};
    Eigen::VectorXd scratch_, xy_;
};

struct MonteCarloEstimate {
    std::complex<double> mean;
    double se_re = 0.0;
    double se_im = 0.0;
    std::size_t samples = 0;

    /// Standard error of the complex mean, sqrt(se_re^2 + se_im^2).
    double se() const;
};

/// Sample mean of prod_j z_j^{n_j} conj(z_j)^{m_j} with componentwise standard errors.
MonteCarloEstimate mc_estimate_moment(GaussianSampler& sampler, const MixedExponent& e, std::size_t samples);

}  // namespace omegacub

#endif
