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

#include "omegacub/cyclo.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>
#include <shared_mutex>
#include <sstream>

#include "omegacub/errors.hpp"

namespace omegacub {

// ---------------------------------------------------------------------------
// CycPoly

CycPoly::CycPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void CycPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

CycPoly CycPoly::x_pow_minus_one(int m) {
    std::vector<Integer> c(static_cast<std::size_t>(m) + 1, 0);
    c.front() = -1;
    c.back() = 1;
    return CycPoly(std::move(c));
}

CycPoly operator*(const CycPoly& a, const CycPoly& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return CycPoly(std::move(c));
}

CycPoly CycPoly::divide_exact(const CycPoly& divisor) const {
    if (!divisor.is_monic()) throw InputError("CycPoly::divide_exact: divisor must be monic");
    const int dd = divisor.degree();
    std::vector<Integer> rem = coeffs_;
    if (degree() < dd) {
        if (!rem.empty()) throw InvariantError("CycPoly::divide_exact: nonzero remainder");
        return {};
    }
    std::vector<Integer> quot(static_cast<std::size_t>(degree() - dd) + 1, 0);
    for (int i = degree(); i >= dd; --i) {
        const Integer t = rem[static_cast<std::size_t>(i)];
        if (t == 0) continue;
        quot[static_cast<std::size_t>(i - dd)] = t;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= t * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    for (const auto& r : rem)
        if (r != 0) throw InvariantError("CycPoly::divide_exact: nonzero remainder");
    return CycPoly(std::move(quot));
}

std::string CycPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (!first || c < 0) os << (c < 0 ? (first ? "-" : " - ") : " + ");
        if (mag != 1 || i == 0) os << mag;
        if (i > 0) os << "x";
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

namespace {

std::shared_mutex phi_mutex;
std::map<int, CycPoly>& phi_table() {
    static std::map<int, CycPoly> table;
    return table;
}

CycPoly compute_cyclotomic(int m) {
    CycPoly p = CycPoly::x_pow_minus_one(m);
    for (int d = 1; d < m; ++d)
        if (m % d == 0) p = p.divide_exact(cyclotomic_poly(d));
    return p;
}

}  // namespace

const CycPoly& cyclotomic_poly(int m) {
    if (m < 1) throw InputError("cyclotomic_poly: modulus must be >= 1");
    {
        std::shared_lock lock(phi_mutex);
        auto it = phi_table().find(m);
        if (it != phi_table().end()) return it->second;
    }
    // Computed outside the lock: the recursion takes the lock for each divisor.
    CycPoly p = compute_cyclotomic(m);
    std::unique_lock lock(phi_mutex);
    return phi_table().try_emplace(m, std::move(p)).first->second;
}

int euler_phi(int m) {
    if (m < 1) throw InputError("euler_phi: argument must be >= 1");
    int result = m;
    int x = m;
    for (int p = 2; p * p <= x; ++p) {
        if (x % p != 0) continue;
        while (x % p == 0) x /= p;
        result -= result / p;
    }
    if (x > 1) result -= result / x;
    return result;
}

// ---------------------------------------------------------------------------
// Rational polynomial helpers for inversion.

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// a = q*b + r
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    r = a;
    trim(r);
    q.clear();
    if (r.size() < b.size()) return;
    q.assign(r.size() - b.size() + 1, 0);
    const Rational lead = b.back();
    for (std::size_t i = r.size(); i-- >= b.size();) {
        if (r[i] == 0) continue;
        const Rational t = r[i] / lead;
        q[i - (b.size() - 1)] = t;
        for (std::size_t j = 0; j < b.size(); ++j) r[i - (b.size() - 1) + j] -= t * b[j];
    }
    trim(r);
    trim(q);
}

// Reduces an arbitrary-length coefficient vector modulo the monic Phi_m in place
// and truncates it to phi(m) entries.
void reduce_mod_phi(std::vector<Rational>& r, const CycPoly& phi) {
    const auto deg = static_cast<std::size_t>(phi.degree());
    const auto& pc = phi.coeffs();
    for (std::size_t i = r.size(); i-- > deg;) {
        if (r[i] == 0) continue;
        const Rational t = r[i];
        for (std::size_t j = 0; j <= deg; ++j) r[i - deg + j] -= t * pc[j];
    }
    r.resize(deg, 0);
}

std::size_t mod_index(long long j, int m) {
    long long r = j % m;
    if (r < 0) r += m;
    return static_cast<std::size_t>(r);
}

}  // namespace

// ---------------------------------------------------------------------------
// CycNum

CycNum::CycNum(int m) : m_(m) {
    if (m < 1) throw InputError("CycNum: modulus must be >= 1");
    c_.assign(static_cast<std::size_t>(cyclotomic_poly(m).degree()), 0);
}

CycNum::CycNum(int m, const Rational& value) : CycNum(m) {
    c_[0] = value;
    c_[0].canonicalize();
}

CycNum CycNum::from_group_ring(int m, std::span<const Rational> c) {
    CycNum out(m);
    std::vector<Rational> g(static_cast<std::size_t>(m), 0);
    for (std::size_t j = 0; j < c.size(); ++j) g[j % static_cast<std::size_t>(m)] += c[j];
    reduce_mod_phi(g, cyclotomic_poly(m));
    out.c_ = std::move(g);
    return out;
}

CycNum root_power(int m, long long j) {
    std::vector<Rational> g(static_cast<std::size_t>(m), 0);
    g[mod_index(j, m)] = 1;
    return CycNum::from_group_ring(m, g);
}

CycNum root_sum(int m, std::span<const long long> counts) {
    std::vector<Rational> g(static_cast<std::size_t>(m), 0);
    for (std::size_t r = 0; r < counts.size(); ++r) g[r % static_cast<std::size_t>(m)] += static_cast<long>(counts[r]);
    return CycNum::from_group_ring(m, g);
}

bool CycNum::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

std::optional<Rational> CycNum::as_rational() const {
    for (std::size_t j = 1; j < c_.size(); ++j)
        if (c_[j] != 0) return std::nullopt;
    return c_[0];
}

void CycNum::check_same_field(const CycNum& other) const {
    if (m_ != other.m_)
        throw InputError("CycNum: modulus mismatch (" + std::to_string(m_) + " vs " + std::to_string(other.m_) + ")");
}

CycNum CycNum::conj() const {
    std::vector<Rational> g(static_cast<std::size_t>(m_), 0);
    for (std::size_t j = 0; j < c_.size(); ++j) g[mod_index(-static_cast<long long>(j), m_)] += c_[j];
    return from_group_ring(m_, g);
}

CycNum CycNum::times_root(long long j) const {
    const auto shift = mod_index(j, m_);
    std::vector<Rational> g(static_cast<std::size_t>(m_), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) g[(i + shift) % static_cast<std::size_t>(m_)] += c_[i];
    return from_group_ring(m_, g);
}

CycNum CycNum::inv() const {
    if (is_zero()) throw InputError("CycNum::inv: division by zero");
    const CycPoly& phi = cyclotomic_poly(m_);
    QPoly r0(phi.coeffs().begin(), phi.coeffs().end());
    QPoly r1(c_.begin(), c_.end());
    trim(r1);
    // Invariant: s_i * a == r_i (mod Phi).
    QPoly s0, s1{Rational(1)};
    while (r1.size() > 1) {
        QPoly q, r;
        divmod(r0, r1, q, r);
        QPoly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r1 is a nonzero constant since Phi_m is irreducible.
    if (r1.empty()) throw InvariantError("CycNum::inv: zero divisor in Q(w_m)");
    const Rational c = r1[0];
    for (auto& x : s1) x /= c;
    reduce_mod_phi(s1, phi);
    CycNum out(m_);
    out.c_ = std::move(s1);
    return out;
}

std::complex<double> CycNum::to_complex() const {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const double theta = -2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m_);
        acc += c_[j].get_d() * std::polar(1.0, theta);
    }
    return acc;
}

CycNum CycNum::operator-() const {
    CycNum out(*this);
    for (auto& c : out.c_) c = -c;
    return out;
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
    check_same_field(rhs);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += rhs.c_[j];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) {
    check_same_field(rhs);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= rhs.c_[j];
    return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    a.check_same_field(b);
    const std::size_t d = a.c_.size();
    std::vector<Rational> r(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (b.c_[j] != 0) r[i + j] += a.c_[i] * b.c_[j];
    }
    reduce_mod_phi(r, cyclotomic_poly(a.m_));
    CycNum out(a.m_);
    out.c_ = std::move(r);
    return out;
}

CycNum& CycNum::operator*=(const CycNum& rhs) { return *this = *this * rhs; }

CycNum& CycNum::operator/=(const CycNum& rhs) {
    check_same_field(rhs);
    return *this = *this * rhs.inv();
}

CycNum& CycNum::operator*=(const Rational& rhs) {
    for (auto& c : c_) c *= rhs;
    return *this;
}

// ---------------------------------------------------------------------------
// Text form: terms ordered by power, e.g. "(1/8)+(1/8)w", "1-w^2", "-(2/3)w^3".

std::string CycNum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        const Rational& c = c_[j];
        if (c == 0) continue;
        const Rational mag = abs(c);
        if (c < 0)
            os << "-";
        else if (!first)
            os << "+";
        const bool unit = (mag == 1);
        if (j == 0 || !unit) {
            if (mag.get_den() == 1)
                os << mag.get_num();
            else
                os << "(" << mag.get_num() << "/" << mag.get_den() << ")";
        }
        if (j >= 1) os << "w";
        if (j >= 2) os << "^" << j;
        first = false;
    }
    return first ? "0" : os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.to_string(); }

namespace {

class TermParser {
   public:
    TermParser(std::string_view text) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }

    std::vector<Rational> parse(int m) {
        std::vector<Rational> g(static_cast<std::size_t>(m), 0);
        if (s_.empty()) fail("empty expression");
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = (s_[pos_++] == '-') ? -1 : 1;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            Rational coeff = 1;
            bool have_coeff = false;
            if (peek() == '(') {
                ++pos_;
                coeff = fraction();
                expect(')');
                have_coeff = true;
            } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff = fraction();
                have_coeff = true;
            }
            if (peek() == '*') {
                if (!have_coeff) fail("'*' without coefficient");
                ++pos_;
                if (peek() != 'w') fail("expected 'w' after '*'");
            }
            long long power = 0;
            if (peek() == 'w') {
                ++pos_;
                power = 1;
                if (peek() == '^') {
                    ++pos_;
                    power = integer().get_si();
                }
            } else if (!have_coeff) {
                fail("expected a term");
            }
            g[static_cast<std::size_t>(power % m)] += sign * coeff;
        }
        return g;
    }

   private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void expect(char ch) {
        if (peek() != ch) fail(std::string("expected '") + ch + "'");
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("cannot parse cyclotomic value '" + s_ + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    Integer integer() {
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        Integer v(s_.substr(start, pos_ - start));
        return neg ? Integer(-v) : v;
    }

    Rational fraction() {
        Integer num = integer();
        Integer den = 1;
        if (peek() == '/') {
            ++pos_;
            den = integer();
            if (den == 0) fail("zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

CycNum CycNum::parse(int m, std::string_view text) {
    if (m < 1) throw InputError("CycNum::parse: modulus must be >= 1");
    TermParser p(text);
    auto g = p.parse(m);
    return from_group_ring(m, g);
}

}  // namespace omegacub
