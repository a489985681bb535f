#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "parastat/errors.hpp"

namespace parastat {

using Int = mpz_class;

/// Reduced fraction with positive denominator. Construction canonicalizes,
/// so equality is plain value equality.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit by design
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw Error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    const Int num() const { return v_.get_num(); }
    const Int den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { Rational r; r.v_ = ::abs(v_); return r; }

    double to_double() const { return v_.get_d(); }

    /// "n" when integral, "n/d" otherwise.
    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

} // namespace parastat
