#pragma once

#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "parastat/rational.hpp"

namespace parastat {

/// c * sqrt(d) with c rational and d a square-free positive integer.
/// d == 1 encodes a pure rational.
struct Radical {
    Rational coeff;
    Int radicand{1};
};

inline constexpr unsigned long kDefaultFactorBound = 1000000;

/// Splits a nonnegative rational q into c*sqrt(d) with c >= 0 and d square-free,
/// c^2 * d == q. Factorization is trial division up to `bound`; a composite
/// non-square remainder past the bound is an error.
inline Radical sqrt_normalize(const Rational& q, unsigned long bound = kDefaultFactorBound) {
    if (q.sign() < 0) throw NegativeRadicand("sqrt_normalize: negative input " + q.str());
    if (q.is_zero()) return Radical{Rational(0), Int(1)};

    // sqrt(a/b) = sqrt(a*b)/b
    Int n = q.num() * q.den();
    Int square_root(1); // product of p^(e/2)
    Int squarefree(1);  // product of p^(e mod 2)
    Int f(2);
    while (f * f <= n && mpz_cmp_ui(f.get_mpz_t(), bound) <= 0) {
        if (n % f == 0) {
            unsigned long e = 0;
            while (n % f == 0) {
                n /= f;
                ++e;
            }
            for (unsigned long i = 0; i + 1 < e; i += 2) square_root *= f;
            if (e % 2 == 1) squarefree *= f;
        }
        f += (f == 2) ? 1 : 2;
    }
    if (n > 1) {
        if (f * f > n) {
            squarefree *= n; // no divisor below sqrt(n): n is prime
        } else if (mpz_perfect_square_p(n.get_mpz_t())) {
            Int s;
            mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
            square_root *= s; // p^2 with p prime beyond the bound
        } else {
            Int limit = Int(bound) * Int(bound);
            if (n <= limit) {
                squarefree *= n; // two factors above the bound would exceed bound^2
            } else {
                throw FactorBoundExceeded("sqrt_normalize: remainder " + n.get_str() +
                                          " exceeds trial-division bound");
            }
        }
    }
    return Radical{Rational(square_root, q.den()), squarefree};
}

/// Finite Q-linear combination of square roots of distinct square-free
/// positive integers, in canonical form: no zero coefficients stored, the
/// empty sum is the unique zero. Distinct square-free radicals are linearly
/// independent over Q, so map equality is value equality.
class RadicalSum {
public:
    RadicalSum() = default;
    RadicalSum(const Rational& q) { // NOLINT: implicit by design
        if (!q.is_zero()) terms_[Int(1)] = q;
    }
    RadicalSum(long n) : RadicalSum(Rational(n)) {} // NOLINT
    RadicalSum(const Radical& r) {                  // NOLINT
        if (!r.coeff.is_zero()) terms_[r.radicand] = r.coeff;
    }

    static RadicalSum sqrt_of(const Rational& q, unsigned long bound = kDefaultFactorBound) {
        return RadicalSum(sqrt_normalize(q, bound));
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
    }
    /// Coefficient of sqrt(1); zero unless the value has a rational part.
    Rational rational_part() const {
        auto it = terms_.find(Int(1));
        return it == terms_.end() ? Rational(0) : it->second;
    }
    bool is_single_radical() const { return terms_.size() <= 1; }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Int, Rational>& terms() const { return terms_; }

    RadicalSum& operator+=(const RadicalSum& o) {
        for (const auto& [d, c] : o.terms_) add_term(d, c);
        return *this;
    }
    RadicalSum& operator-=(const RadicalSum& o) {
        for (const auto& [d, c] : o.terms_) add_term(d, -c);
        return *this;
    }
    RadicalSum operator-() const {
        RadicalSum r;
        for (const auto& [d, c] : terms_) r.terms_[d] = -c;
        return r;
    }
    friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { a += b; return a; }
    friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { a -= b; return a; }

    friend RadicalSum operator*(const RadicalSum& a, const RadicalSum& b) {
        RadicalSum r;
        for (const auto& [d1, c1] : a.terms_) {
            for (const auto& [d2, c2] : b.terms_) {
                // sqrt(d1)*sqrt(d2) = g*sqrt((d1/g)*(d2/g)) with g = gcd(d1,d2);
                // the product of coprime square-free integers stays square-free.
                Int g = gcd(d1, d2);
                r.add_term((d1 / g) * (d2 / g), c1 * c2 * Rational(g));
            }
        }
        return r;
    }
    RadicalSum& operator*=(const RadicalSum& o) { *this = *this * o; return *this; }

    friend bool operator==(const RadicalSum& a, const RadicalSum& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const RadicalSum& a, const RadicalSum& b) {
        return !(a == b);
    }
    friend bool operator<(const RadicalSum& a, const RadicalSum& b) {
        return a.terms_ < b.terms_;
    }

    /// Double-precision evaluation; diagnostics only, never used in verification.
    double to_double() const {
        double s = 0.0;
        for (const auto& [d, c] : terms_) s += c.to_double() * std::sqrt(d.get_d());
        return s;
    }

    /// Canonical encoding: {"terms":[{"num":N,"den":D,"radicand":R},...]},
    /// terms sorted by radicand ascending.
    std::string to_json() const {
        std::ostringstream os;
        os << "{\"terms\":[";
        bool first = true;
        for (const auto& [d, c] : terms_) {
            if (!first) os << ",";
            first = false;
            os << "{\"num\":" << c.num().get_str() << ",\"den\":" << c.den().get_str()
               << ",\"radicand\":" << d.get_str() << "}";
        }
        os << "]}";
        return os.str();
    }

    /// Human form: terms as a/b√d, e.g. "√2", "-3/2√6 + 1/2".
    std::string to_text() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [d, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a.sign() < 0) { os << "-"; a = -a; }
            } else {
                os << (a.sign() < 0 ? " - " : " + ");
                if (a.sign() < 0) a = -a;
            }
            first = false;
            bool unit = (a == Rational(1));
            if (d == 1) {
                os << a.str();
            } else {
                if (!unit) os << a.str();
                os << "√" << d.get_str();
            }
        }
        return os.str();
    }

private:
    void add_term(const Int& d, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(d);
        if (it == terms_.end()) {
            terms_[d] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<Int, Rational> terms_;
};

inline RadicalSum operator*(const Rational& a, const RadicalSum& b) {
    return RadicalSum(a) * b;
}

} // namespace parastat
