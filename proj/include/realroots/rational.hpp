#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "realroots/errors.hpp"

namespace realroots {

using Integer = mpz_class;

/// Exact rational number. Always kept canonical: positive denominator,
/// gcd(|numerator|, denominator) = 1. Arithmetic is exact; the bignum
/// heavy lifting is delegated to GMP.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}           // NOLINT: implicit conversion intended
    Rational(long n) : q_(n) {}          // NOLINT
    Rational(const Integer& n) : q_(n) {} // NOLINT
    Rational(long n, long d) : q_(n, d) { requireNonzeroDen(); q_.canonicalize(); }
    Rational(const Integer& n, const Integer& d) : q_(n, d) {
        requireNonzeroDen();
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p/q" or "p" with optional leading '-'. Throws SyntaxError on junk.
    static Rational fromString(const std::string& s) {
        if (s.empty()) throw SyntaxError("empty rational literal", 0);
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw SyntaxError("bad rational literal '" + s + "'", 0);
        if (q.get_den() == 0) throw DivisionByZero();
        q.canonicalize();
        return Rational(q);
    }

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool isZero() const { return sgn(q_) == 0; }
    bool isInteger() const { return q_.get_den() == 1; }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.isZero()) throw DivisionByZero();
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational inverse() const {
        if (isZero()) throw DivisionByZero();
        return Rational(mpq_class(1 / q_));
    }

    Rational pow(unsigned long e) const {
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), e);
        mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), e);
        return Rational(num, den);
    }

    /// "p/q", with "/q" omitted when the denominator is 1.
    std::string toString() const { return q_.get_str(); }

    const mpq_class& raw() const { return q_; }

private:
    void requireNonzeroDen() const {
        if (q_.get_den() == 0) throw DivisionByZero();
    }

    mpq_class q_;
};

inline int sign(const Rational& q) { return q.sign(); }

inline std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.toString();
}

} // namespace realroots
