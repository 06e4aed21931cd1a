#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>

#include "realroots/rational.hpp"

namespace realroots {

/// Element of Z[1/2]: value = mantissa * 2^exponent. Canonical form keeps the
/// mantissa odd (or zero with exponent 0), so equality is structural.
/// Closed under addition and halving, which is all bisection needs.
class Dyadic {
public:
    Dyadic() : mantissa_(0), exponent_(0) {}
    Dyadic(long n) : mantissa_(n), exponent_(0) { normalize(); } // NOLINT
    Dyadic(Integer mantissa, long exponent)
        : mantissa_(std::move(mantissa)), exponent_(exponent) {
        normalize();
    }

    /// 2^k for any integer k (including negative).
    static Dyadic powerOfTwo(long k) { return Dyadic(Integer(1), k); }

    const Integer& mantissa() const { return mantissa_; }
    long exponent() const { return exponent_; }

    bool isZero() const { return mantissa_ == 0; }
    int sign() const { return sgn(mantissa_); }

    Rational toRational() const {
        Integer two_abs_e;
        mpz_ui_pow_ui(two_abs_e.get_mpz_t(), 2,
                      static_cast<unsigned long>(exponent_ < 0 ? -exponent_ : exponent_));
        if (exponent_ >= 0) return Rational(Integer(mantissa_ * two_abs_e));
        return Rational(mantissa_, two_abs_e);
    }

    Dyadic operator-() const { return Dyadic(-mantissa_, exponent_); }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        if (a.isZero()) return b;
        if (b.isZero()) return a;
        long e = std::min(a.exponent_, b.exponent_);
        return Dyadic(a.shiftedMantissa(e) + b.shiftedMantissa(e), e);
    }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

    Dyadic halved() const { return Dyadic(mantissa_, exponent_ - 1); }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
    }
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
        Dyadic d = a - b;
        int s = d.sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Same serialization as the embedded rational, e.g. "-23/16".
    std::string toString() const { return toRational().toString(); }

private:
    void normalize() {
        if (mantissa_ == 0) {
            exponent_ = 0;
            return;
        }
        unsigned long tz = mpz_scan1(mantissa_.get_mpz_t(), 0);
        if (tz > 0) {
            mantissa_ >>= tz;
            exponent_ += static_cast<long>(tz);
        }
    }

    /// Mantissa as seen at exponent e <= exponent_.
    Integer shiftedMantissa(long e) const { return mantissa_ << (exponent_ - e); }

    Integer mantissa_;
    long exponent_;
};

/// Exact midpoint (a+b)/2; dyadics are closed under this.
inline Dyadic midpoint(const Dyadic& a, const Dyadic& b) { return (a + b).halved(); }

inline std::ostream& operator<<(std::ostream& os, const Dyadic& d) {
    return os << d.toString();
}

} // namespace realroots
