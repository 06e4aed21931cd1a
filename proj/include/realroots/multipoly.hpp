#pragma once

#include <algorithm>
#include <iosfwd>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "realroots/errors.hpp"
#include "realroots/monomial.hpp"
#include "realroots/rational.hpp"
#include "realroots/unipoly.hpp"

namespace realroots {

/// Sparse multivariate polynomial over Rational. Terms are kept sorted in
/// descending monomial order with no zero coefficients, so the leading term
/// is terms().front(). The variable list and the order travel with the value;
/// binary operations require both to agree.
class MultiPoly {
public:
    struct Term {
        Monomial monomial;
        Rational coeff;
    };

    MultiPoly() = default;
    MultiPoly(std::vector<std::string> vars, MonomialOrder order = MonomialOrder())
        : vars_(std::move(vars)), order_(order) {}

    static MultiPoly zero(std::vector<std::string> vars, MonomialOrder order = MonomialOrder()) {
        return MultiPoly(std::move(vars), order);
    }
    static MultiPoly constant(Rational c, std::vector<std::string> vars,
                              MonomialOrder order = MonomialOrder()) {
        MultiPoly p(std::move(vars), order);
        if (!c.isZero()) p.terms_.push_back({Monomial::one(p.vars_.size()), std::move(c)});
        return p;
    }
    static MultiPoly variable(std::size_t i, std::vector<std::string> vars,
                              MonomialOrder order = MonomialOrder()) {
        MultiPoly p(std::move(vars), order);
        p.terms_.push_back({Monomial::variable(i, p.vars_.size()), Rational(1)});
        return p;
    }
    static MultiPoly fromTerms(std::vector<Term> terms, std::vector<std::string> vars,
                               MonomialOrder order = MonomialOrder()) {
        MultiPoly p(std::move(vars), order);
        for (auto& t : terms) p.addTerm(t.monomial, t.coeff);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool isZero() const { return terms_.empty(); }
    bool isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.isOne()); }
    Rational constantValue() const {
        return isZero() ? Rational(0) : terms_.back().monomial.isOne() ? terms_.back().coeff
                                                                       : Rational(0);
    }

    const Monomial& leadingMonomial() const {
        requireNonzero();
        return terms_.front().monomial;
    }
    const Rational& leadingCoeff() const {
        requireNonzero();
        return terms_.front().coeff;
    }
    Term leadingTerm() const {
        requireNonzero();
        return terms_.front();
    }

    unsigned totalDegree() const {
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max(d, t.monomial.totalDegree());
        return d;
    }

    /// Re-sorts the terms under a different order.
    MultiPoly withOrder(MonomialOrder order) const {
        MultiPoly p(vars_, order);
        p.terms_ = terms_;
        std::sort(p.terms_.begin(), p.terms_.end(), [&](const Term& a, const Term& b) {
            return order.compare(a.monomial, b.monomial) > 0;
        });
        return p;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r(a.vars_, a.order_);
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() ||
                (i < a.terms_.size() &&
                 a.order_.compare(a.terms_[i].monomial, b.terms_[j].monomial) > 0)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() ||
                       a.order_.compare(a.terms_[i].monomial, b.terms_[j].monomial) < 0) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                Rational c = a.terms_[i].coeff + b.terms_[j].coeff;
                if (!c.isZero()) r.terms_.push_back({a.terms_[i].monomial, std::move(c)});
                ++i, ++j;
            }
        }
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

    /// this * (c * m)
    MultiPoly timesTerm(const Rational& c, const Monomial& m) const {
        MultiPoly r(vars_, order_);
        if (c.isZero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r(a.vars_, a.order_);
        for (const auto& t : b.terms_) r = r + a.timesTerm(t.coeff, t.monomial);
        return r;
    }
    friend MultiPoly operator*(const Rational& s, const MultiPoly& a) {
        if (s.isZero()) return zero(a.vars_, a.order_);
        MultiPoly r = a;
        for (auto& t : r.terms_) t.coeff = s * t.coeff;
        return r;
    }

    MultiPoly pow(unsigned e) const {
        MultiPoly acc = constant(1, vars_, order_);
        MultiPoly base = *this;
        while (e > 0) {
            if (e & 1u) acc = acc * base;
            base = base * base;
            e >>= 1u;
        }
        return acc;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].monomial == b.terms_[i].monomial &&
                  a.terms_[i].coeff == b.terms_[i].coeff))
                return false;
        return true;
    }

    MultiPoly monic() const {
        requireNonzero();
        return leadingCoeff().inverse() * *this;
    }

    Rational eval(const std::vector<Rational>& point) const {
        Rational acc(0);
        for (const auto& t : terms_) {
            Rational v = t.coeff;
            for (std::size_t i = 0; i < nvars(); ++i)
                if (unsigned e = t.monomial.exponent(i)) v *= point[i].pow(e);
            acc += v;
        }
        return acc;
    }

    std::string monomialString(const Monomial& m) const {
        std::ostringstream os;
        bool any = false;
        for (std::size_t i = 0; i < nvars(); ++i) {
            unsigned e = m.exponent(i);
            if (e == 0) continue;
            if (any) os << "*";
            os << vars_[i];
            if (e != 1) os << "^" << e;
            any = true;
        }
        return any ? os.str() : std::string();
    }

    /// Round-trips through the expression parser, e.g. "x^2*y^2 - 3*x^2 + 5".
    std::string toString() const {
        if (isZero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            Rational mag = t.coeff.abs();
            if (first) {
                if (t.coeff.sign() < 0) os << "-";
                first = false;
            } else {
                os << (t.coeff.sign() < 0 ? " - " : " + ");
            }
            std::string mono = monomialString(t.monomial);
            if (mono.empty()) {
                os << mag.toString();
            } else if (mag == Rational(1)) {
                os << mono;
            } else {
                os << mag.toString() << "*" << mono;
            }
        }
        return os.str();
    }

private:
    void requireNonzero() const {
        if (isZero()) throw ZeroPolynomial("leading term of multivariate polynomial");
    }

    void addTerm(const Monomial& m, const Rational& c) {
        if (c.isZero()) return;
        auto it = std::lower_bound(
            terms_.begin(), terms_.end(), m,
            [&](const Term& t, const Monomial& key) { return order_.compare(t.monomial, key) > 0; });
        if (it != terms_.end() && it->monomial == m) {
            it->coeff += c;
            if (it->coeff.isZero()) terms_.erase(it);
        } else {
            terms_.insert(it, {m, c});
        }
    }

    std::vector<std::string> vars_;
    MonomialOrder order_;
    std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
    return os << p.toString();
}

} // namespace realroots
