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

#ifndef OMEGACUB_CYCLO_HPP
#define OMEGACUB_CYCLO_HPP

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace omegacub {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer-coefficient univariate polynomial, lowest degree first.
class CycPoly {
   public:
    CycPoly() = default;
    explicit CycPoly(std::vector<Integer> coeffs);

    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

    /// x^m - 1
    static CycPoly x_pow_minus_one(int m);

    friend CycPoly operator*(const CycPoly& a, const CycPoly& b);
    friend bool operator==(const CycPoly& a, const CycPoly& b) = default;

    /// Exact division; throws InvariantError if the remainder is nonzero.
    /// The divisor must be monic.
    CycPoly divide_exact(const CycPoly& divisor) const;

    std::string to_string() const;

   private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// The m-th cyclotomic polynomial, memoized. The returned reference stays valid
/// for the lifetime of the program; concurrent callers are safe.
const CycPoly& cyclotomic_poly(int m);

/// Euler's totient, i.e. deg Phi_m.
int euler_phi(int m);

/*
 * Exact element of the cyclotomic field Q(w), w a primitive m-th root of unity.
 *
 * Stored as the canonical residue sum_j c_j w^j, 0 <= j < phi(m), modulo Phi_m,
 * so two values are equal iff their coefficient vectors are. The numeric
 * embedding used by to_complex() is w = exp(-2*pi*i/m).
 */
class CycNum {
   public:
    /// Zero of Q(w_1) = Q.
    CycNum() : CycNum(1) {}
    /// Zero of Q(w_m).
    explicit CycNum(int m);
    CycNum(int m, const Rational& value);

    /// sum_j c_j w^j for arbitrary exponents j (taken mod m), re-canonicalized.
    static CycNum from_group_ring(int m, std::span<const Rational> c);

    /// Parses the format produced by to_string(), e.g. "(1/8)+(1/8)w-3w^2".
    static CycNum parse(int m, std::string_view text);

    int modulus() const noexcept { return m_; }
    std::span<const Rational> coeffs() const noexcept { return c_; }

    bool is_zero() const;
    std::optional<Rational> as_rational() const;

    CycNum conj() const;
    CycNum inv() const;
    /// this * w^j
    CycNum times_root(long long j) const;

    std::complex<double> to_complex() const;
    std::string to_string() const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& rhs);
    CycNum& operator-=(const CycNum& rhs);
    CycNum& operator*=(const CycNum& rhs);
    CycNum& operator/=(const CycNum& rhs);
    CycNum& operator*=(const Rational& rhs);

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
    friend CycNum operator*(CycNum a, const Rational& q) { return a *= q; }
    friend CycNum operator*(const Rational& q, CycNum a) { return a *= q; }

    /// Values of different moduli never compare equal.
    friend bool operator==(const CycNum& a, const CycNum& b) { return a.m_ == b.m_ && a.c_ == b.c_; }

   private:
    void check_same_field(const CycNum& other) const;

    int m_;
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& x);

/// w^j; j is reduced mod m.
CycNum root_power(int m, long long j);

/// Sum of several roots of unity given by exponent counts: sum_r counts[r] w^r.
CycNum root_sum(int m, std::span<const long long> counts);

}  // namespace omegacub

#endif
