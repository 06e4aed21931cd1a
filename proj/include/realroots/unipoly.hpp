#pragma once

#include <iosfwd>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "realroots/errors.hpp"
#include "realroots/extended.hpp"
#include "realroots/rational.hpp"

namespace realroots {

/// Dense univariate polynomial over Rational. coeff(i) is the coefficient of
/// x^i; the coefficient vector carries no trailing zeros, and the zero
/// polynomial is the empty vector (degree() == -1). The variable name is a
/// display label only; arithmetic ignores it and keeps the left operand's.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::string var) : var_(std::move(var)) {}
    UniPoly(std::vector<Rational> coeffs, std::string var = "x")
        : coeffs_(std::move(coeffs)), var_(std::move(var)) {
        trim();
    }

    static UniPoly zero(std::string var = "x") { return UniPoly(std::move(var)); }
    static UniPoly constant(Rational c, std::string var = "x") {
        return UniPoly({std::move(c)}, std::move(var));
    }
    static UniPoly variable(std::string var = "x") {
        return UniPoly({Rational(0), Rational(1)}, std::move(var));
    }
    /// c * x^e
    static UniPoly monomial(Rational c, unsigned e, std::string var = "x") {
        std::vector<Rational> cs(e + 1, Rational(0));
        cs[e] = std::move(c);
        return UniPoly(std::move(cs), std::move(var));
    }
    /// From degree-descending coefficient list, e.g. {1,0,-2} -> x^2 - 2.
    static UniPoly fromDescending(std::vector<Rational> cs, std::string var = "x") {
        std::vector<Rational> up(cs.rbegin(), cs.rend());
        return UniPoly(std::move(up), std::move(var));
    }

    bool isZero() const { return coeffs_.empty(); }
    bool isConstant() const { return coeffs_.size() <= 1; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& coeff(std::size_t i) const {
        static const Rational kZero(0);
        return i < coeffs_.size() ? coeffs_[i] : kZero;
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leadingCoeff() const {
        if (isZero()) throw ZeroPolynomial("leadingCoeff");
        return coeffs_.back();
    }
    const std::string& variableName() const { return var_; }
    UniPoly withVariableName(std::string var) const {
        UniPoly r = *this;
        r.var_ = std::move(var);
        return r;
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = a.coeff(i) + b.coeff(i);
        return UniPoly(std::move(cs), a.var_);
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.isZero() || b.isZero()) return zero(a.var_);
        std::vector<Rational> cs(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return UniPoly(std::move(cs), a.var_);
    }
    friend UniPoly operator*(const Rational& s, const UniPoly& a) {
        UniPoly r = a;
        for (auto& c : r.coeffs_) c = s * c;
        r.trim();
        return r;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    UniPoly pow(unsigned e) const {
        UniPoly acc = constant(1, var_);
        UniPoly base = *this;
        while (e > 0) {
            if (e & 1u) acc = acc * base;
            base = base * base;
            e >>= 1u;
        }
        return acc;
    }

    UniPoly derivative() const {
        if (isConstant()) return zero(var_);
        std::vector<Rational> cs(coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            cs[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
        return UniPoly(std::move(cs), var_);
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Sign of f at a point of the extended line. f(+inf) carries the sign of
    /// the leading coefficient, f(-inf) that of the leading coefficient of f(-x).
    int evalSign(const ExtendedPoint& a) const {
        if (isZero()) return 0;
        switch (a.kind()) {
            case ExtendedPoint::Kind::PosInfinity:
                return leadingCoeff().sign();
            case ExtendedPoint::Kind::NegInfinity:
                return degree() % 2 == 0 ? leadingCoeff().sign() : -leadingCoeff().sign();
            default:
                return eval(a.value()).sign();
        }
    }

    /// Exact division with remainder: f = q*g + r, deg r < deg g.
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g) {
        if (g.isZero()) throw DivisionByZeroPoly();
        UniPoly q = zero(f.var_);
        UniPoly r = f;
        const Rational& lg = g.leadingCoeff();
        while (!r.isZero() && r.degree() >= g.degree()) {
            unsigned shift = static_cast<unsigned>(r.degree() - g.degree());
            Rational c = r.leadingCoeff() / lg;
            UniPoly t = monomial(c, shift, f.var_);
            q = q + t;
            r = r - t * g;
        }
        return {q, r};
    }

    /// Monic greatest common divisor by the Euclidean algorithm. Remainders
    /// are stripped to their primitive parts, which changes nothing modulo
    /// the final monic scaling but keeps the coefficients small.
    friend UniPoly gcd(const UniPoly& f, const UniPoly& g) {
        if (f.isZero() && g.isZero()) throw BothZero();
        UniPoly a = f.isZero() ? f : f.primitivePart();
        UniPoly b = g.isZero() ? g : g.primitivePart();
        while (!b.isZero()) {
            UniPoly r = divmod(a, b).second;
            a = std::move(b);
            b = r.isZero() ? std::move(r) : r.primitivePart();
        }
        return a.monic();
    }

    /// f / gcd(f, f'): same roots, all simple, monic.
    UniPoly squarefreePart() const {
        if (isZero()) throw ZeroPolynomial("squarefreePart");
        if (isConstant()) return constant(1, var_);
        UniPoly g = gcd(*this, derivative());
        return divmod(*this, g).first.monic();
    }

    UniPoly monic() const {
        if (isZero()) throw ZeroPolynomial("monic");
        return leadingCoeff().inverse() * *this;
    }

    /// Content: the positive rational gcd(numerators)/lcm(denominators), so
    /// that f / content(f) has coprime integer coefficients.
    Rational content() const {
        if (isZero()) throw ZeroPolynomial("content");
        Integer num(0), den(1);
        for (const auto& c : coeffs_) {
            if (c.isZero()) continue;
            num = gcd(num, c.numerator());
            den = lcm(den, c.denominator());
        }
        return Rational(num, den);
    }

    /// f divided by its content: coprime integer coefficients, same signs
    /// everywhere (the content is positive).
    UniPoly primitivePart() const { return content().inverse() * *this; }

    /// f(-x): negates odd-degree coefficients.
    UniPoly reflected() const {
        UniPoly r = *this;
        for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
        return r;
    }

    /// f(g(x)) by Horner over polynomials.
    UniPoly compose(const UniPoly& g) const {
        UniPoly acc = zero(g.var_);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * g + constant(*it, g.var_);
        return acc;
    }

    /// Human-readable expression, e.g. "2*x^3 - 1/2*x + 7"; round-trips
    /// through the expression parser.
    std::string toString() const {
        if (isZero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const Rational& c = coeffs_[static_cast<std::size_t>(i)];
            if (c.isZero()) continue;
            Rational mag = c.abs();
            if (first) {
                if (c.sign() < 0) os << "-";
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            bool unitCoeff = (mag == Rational(1)) && i != 0;
            if (!unitCoeff) os << mag.toString();
            if (i != 0) {
                if (!unitCoeff) os << "*";
                os << var_;
                if (i != 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().isZero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
    std::string var_ = "x";
};

inline std::ostream& operator<<(std::ostream& os, const UniPoly& f) {
    return os << f.toString();
}

} // namespace realroots
