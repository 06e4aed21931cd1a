#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "realroots/errors.hpp"

namespace realroots {

/// Exponent vector; length is the number of variables of the ambient ring.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }
    static Monomial variable(std::size_t i, std::size_t nvars) {
        Monomial m(nvars);
        m.exps_[i] = 1;
        return m;
    }

    std::size_t nvars() const { return exps_.size(); }
    unsigned exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<unsigned>& exponents() const { return exps_; }

    unsigned totalDegree() const {
        return std::accumulate(exps_.begin(), exps_.end(), 0u);
    }
    bool isOne() const {
        return std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e == 0; });
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > m.exps_[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.exps_.size());
        for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
        return r;
    }
    /// Exact quotient; requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r(a.exps_.size());
        for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
        return r;
    }
    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.exps_.size());
        for (std::size_t i = 0; i < r.exps_.size(); ++i)
            r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    /// Plain lexicographic compare, for use as a container key only; term
    /// ordering goes through MonomialOrder.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

private:
    std::vector<unsigned> exps_;
};

enum class OrderKind { GrevLex, Lex, GrLex };

/// A multiplicative total order on monomials with 1 minimal.
class MonomialOrder {
public:
    MonomialOrder() : kind_(OrderKind::GrevLex) {}
    explicit MonomialOrder(OrderKind kind) : kind_(kind) {}

    OrderKind kind() const { return kind_; }

    /// <0, 0 or >0 as a <, =, > b.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case OrderKind::Lex:
                return lexCompare(a, b);
            case OrderKind::GrLex: {
                if (int d = degCompare(a, b)) return d;
                return lexCompare(a, b);
            }
            case OrderKind::GrevLex:
            default: {
                if (int d = degCompare(a, b)) return d;
                // ties: the last differing exponent decides, reversed
                for (std::size_t i = a.nvars(); i-- > 0;) {
                    if (a.exponent(i) != b.exponent(i))
                        return a.exponent(i) < b.exponent(i) ? 1 : -1;
                }
                return 0;
            }
        }
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    const char* name() const {
        switch (kind_) {
            case OrderKind::Lex: return "lex";
            case OrderKind::GrLex: return "grlex";
            default: return "grevlex";
        }
    }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind_ == b.kind_;
    }

private:
    static int degCompare(const Monomial& a, const Monomial& b) {
        unsigned da = a.totalDegree(), db = b.totalDegree();
        return da < db ? -1 : (da > db ? 1 : 0);
    }
    static int lexCompare(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.nvars(); ++i)
            if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? -1 : 1;
        return 0;
    }

    OrderKind kind_;
};

} // namespace realroots
