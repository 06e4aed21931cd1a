#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>

#include "realroots/rational.hpp"

namespace realroots {

/// A point of the extended real line Q ∪ {±∞}, used for interval endpoints.
/// Total order: -∞ < Finite(q) < +∞.
class ExtendedPoint {
public:
    enum class Kind { NegInfinity, Finite, PosInfinity };

    ExtendedPoint() : kind_(Kind::Finite), value_(0) {}
    explicit ExtendedPoint(Rational q) : kind_(Kind::Finite), value_(std::move(q)) {}

    static ExtendedPoint negInfinity() { return ExtendedPoint(Kind::NegInfinity); }
    static ExtendedPoint posInfinity() { return ExtendedPoint(Kind::PosInfinity); }
    static ExtendedPoint finite(Rational q) { return ExtendedPoint(std::move(q)); }

    Kind kind() const { return kind_; }
    bool isFinite() const { return kind_ == Kind::Finite; }
    bool isNegInfinity() const { return kind_ == Kind::NegInfinity; }
    bool isPosInfinity() const { return kind_ == Kind::PosInfinity; }

    /// Only valid for finite points.
    const Rational& value() const { return value_; }

    friend bool operator==(const ExtendedPoint& a, const ExtendedPoint& b) {
        if (a.kind_ != b.kind_) return false;
        return a.kind_ != Kind::Finite || a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const ExtendedPoint& a, const ExtendedPoint& b) {
        auto level = [](Kind k) { return k == Kind::NegInfinity ? -1 : (k == Kind::Finite ? 0 : 1); };
        if (int la = level(a.kind_), lb = level(b.kind_); la != lb)
            return la <=> lb;
        if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
        return a.value_ <=> b.value_;
    }

    std::string toString() const {
        switch (kind_) {
            case Kind::NegInfinity: return "-inf";
            case Kind::PosInfinity: return "inf";
            default: return value_.toString();
        }
    }

private:
    explicit ExtendedPoint(Kind k) : kind_(k), value_(0) {}

    Kind kind_;
    Rational value_;
};

inline std::ostream& operator<<(std::ostream& os, const ExtendedPoint& p) {
    return os << p.toString();
}

} // namespace realroots
