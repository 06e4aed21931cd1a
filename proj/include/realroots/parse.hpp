#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "realroots/errors.hpp"
#include "realroots/multipoly.hpp"
#include "realroots/rational.hpp"
#include "realroots/unipoly.hpp"

namespace realroots {

/// Parse tree for polynomial expressions.
///
/// Grammar (explicit '*' required, no implicit multiplication, no floats):
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := number | ident | '(' expr ')' | '-' base
///   number := uint ('/' uint)?
struct PolyExpr {
    enum class Kind { Constant, Variable, Add, Subtract, Multiply, Negate, Power };

    Kind kind;
    Rational value;                    // Constant
    std::string name;                  // Variable
    std::shared_ptr<PolyExpr> lhs;     // Add/Subtract/Multiply/Negate/Power
    std::shared_ptr<PolyExpr> rhs;     // Add/Subtract/Multiply
    unsigned exponent = 0;             // Power

    static std::shared_ptr<PolyExpr> constant(Rational v) {
        auto e = std::make_shared<PolyExpr>();
        e->kind = Kind::Constant;
        e->value = std::move(v);
        return e;
    }
    static std::shared_ptr<PolyExpr> variable(std::string n) {
        auto e = std::make_shared<PolyExpr>();
        e->kind = Kind::Variable;
        e->name = std::move(n);
        return e;
    }
    static std::shared_ptr<PolyExpr> node(Kind k, std::shared_ptr<PolyExpr> a,
                                          std::shared_ptr<PolyExpr> b = nullptr) {
        auto e = std::make_shared<PolyExpr>();
        e->kind = k;
        e->lhs = std::move(a);
        e->rhs = std::move(b);
        return e;
    }
    static std::shared_ptr<PolyExpr> power(std::shared_ptr<PolyExpr> base, unsigned exp) {
        auto e = std::make_shared<PolyExpr>();
        e->kind = Kind::Power;
        e->lhs = std::move(base);
        e->exponent = exp;
        return e;
    }
};

namespace detail {

class ExprParser {
public:
    ExprParser(std::string_view src, const std::optional<std::vector<std::string>>& vars)
        : src_(src), vars_(vars) {}

    std::shared_ptr<PolyExpr> parse() {
        auto e = parseExpr();
        skipSpace();
        if (pos_ != src_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return e;
    }

private:
    std::shared_ptr<PolyExpr> parseExpr() {
        skipSpace();
        bool negate = consume('-');
        auto acc = parseTerm();
        if (negate) acc = PolyExpr::node(PolyExpr::Kind::Negate, acc);
        while (true) {
            skipSpace();
            if (consume('+')) {
                acc = PolyExpr::node(PolyExpr::Kind::Add, acc, parseTerm());
            } else if (consume('-')) {
                acc = PolyExpr::node(PolyExpr::Kind::Subtract, acc, parseTerm());
            } else {
                return acc;
            }
        }
    }

    std::shared_ptr<PolyExpr> parseTerm() {
        auto acc = parseFactor();
        while (true) {
            skipSpace();
            if (consume('*')) {
                acc = PolyExpr::node(PolyExpr::Kind::Multiply, acc, parseFactor());
            } else {
                return acc;
            }
        }
    }

    std::shared_ptr<PolyExpr> parseFactor() {
        auto base = parseBase();
        skipSpace();
        if (consume('^')) {
            skipSpace();
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                throw SyntaxError("exponent must be a nonnegative integer literal", pos_);
            return PolyExpr::power(std::move(base), parseUInt());
        }
        return base;
    }

    std::shared_ptr<PolyExpr> parseBase() {
        skipSpace();
        if (pos_ >= src_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = src_[pos_];
        if (c == '-') {
            ++pos_;
            return PolyExpr::node(PolyExpr::Kind::Negate, parseBase());
        }
        if (c == '(') {
            ++pos_;
            auto e = parseExpr();
            skipSpace();
            if (!consume(')')) throw SyntaxError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parseNumber();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            std::string name(src_.substr(start, pos_ - start));
            if (vars_) {
                bool known = false;
                for (const auto& v : *vars_)
                    if (v == name) known = true;
                if (!known) throw UnknownVariable(name);
            }
            return PolyExpr::variable(std::move(name));
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::shared_ptr<PolyExpr> parseNumber() {
        Integer num = parseIntegerDigits();
        if (pos_ < src_.size() && src_[pos_] == '.')
            throw SyntaxError("float literals are not accepted", pos_);
        skipSpace();
        if (consume('/')) {
            skipSpace();
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                throw SyntaxError("expected denominator digits", pos_);
            Integer den = parseIntegerDigits();
            if (den == 0) throw SyntaxError("zero denominator", pos_);
            return PolyExpr::constant(Rational(num, den));
        }
        return PolyExpr::constant(Rational(num));
    }

    Integer parseIntegerDigits() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return Integer(std::string(src_.substr(start, pos_ - start)), 10);
    }

    unsigned parseUInt() {
        std::size_t start = pos_;
        Integer v = parseIntegerDigits();
        if (v > 100000) throw SyntaxError("exponent too large", start);
        return static_cast<unsigned>(v.get_ui());
    }

    void skipSpace() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool consume(char c) {
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string_view src_;
    const std::optional<std::vector<std::string>>& vars_;
    std::size_t pos_ = 0;
};

inline void collectVariablesInto(const PolyExpr& e, std::vector<std::string>& out) {
    switch (e.kind) {
        case PolyExpr::Kind::Variable: {
            for (const auto& v : out)
                if (v == e.name) return;
            out.push_back(e.name);
            return;
        }
        case PolyExpr::Kind::Constant:
            return;
        default:
            if (e.lhs) collectVariablesInto(*e.lhs, out);
            if (e.rhs) collectVariablesInto(*e.rhs, out);
    }
}

} // namespace detail

/// Parses a polynomial expression. When `vars` is given, any identifier
/// outside the list raises UnknownVariable.
inline std::shared_ptr<PolyExpr> parsePoly(
    std::string_view src, const std::optional<std::vector<std::string>>& vars = std::nullopt) {
    return detail::ExprParser(src, vars).parse();
}

/// Variables of the expression, in order of first appearance.
inline std::vector<std::string> collectVariables(const PolyExpr& e) {
    std::vector<std::string> out;
    detail::collectVariablesInto(e, out);
    return out;
}

/// Expands the tree into a sparse multivariate polynomial over `vars`.
inline MultiPoly expandMulti(const PolyExpr& e, const std::vector<std::string>& vars,
                             MonomialOrder order = MonomialOrder()) {
    switch (e.kind) {
        case PolyExpr::Kind::Constant:
            return MultiPoly::constant(e.value, vars, order);
        case PolyExpr::Kind::Variable: {
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == e.name) return MultiPoly::variable(i, vars, order);
            throw UnknownVariable(e.name);
        }
        case PolyExpr::Kind::Add:
            return expandMulti(*e.lhs, vars, order) + expandMulti(*e.rhs, vars, order);
        case PolyExpr::Kind::Subtract:
            return expandMulti(*e.lhs, vars, order) - expandMulti(*e.rhs, vars, order);
        case PolyExpr::Kind::Multiply:
            return expandMulti(*e.lhs, vars, order) * expandMulti(*e.rhs, vars, order);
        case PolyExpr::Kind::Negate:
            return -expandMulti(*e.lhs, vars, order);
        case PolyExpr::Kind::Power:
        default:
            return expandMulti(*e.lhs, vars, order).pow(e.exponent);
    }
}

/// Expands the tree into a dense univariate polynomial in `var`.
inline UniPoly expandUni(const PolyExpr& e, const std::string& var) {
    switch (e.kind) {
        case PolyExpr::Kind::Constant:
            return UniPoly::constant(e.value, var);
        case PolyExpr::Kind::Variable: {
            if (e.name != var) throw UnknownVariable(e.name);
            return UniPoly::variable(var);
        }
        case PolyExpr::Kind::Add:
            return expandUni(*e.lhs, var) + expandUni(*e.rhs, var);
        case PolyExpr::Kind::Subtract:
            return expandUni(*e.lhs, var) - expandUni(*e.rhs, var);
        case PolyExpr::Kind::Multiply:
            return expandUni(*e.lhs, var) * expandUni(*e.rhs, var);
        case PolyExpr::Kind::Negate:
            return -expandUni(*e.lhs, var);
        case PolyExpr::Kind::Power:
        default:
            return expandUni(*e.lhs, var).pow(e.exponent);
    }
}

/// Parses a univariate polynomial; the variable is inferred when the
/// expression mentions exactly one, else defaults to "x" for constants.
inline UniPoly parseUniPoly(std::string_view src) {
    auto tree = parsePoly(src);
    std::vector<std::string> vars = collectVariables(*tree);
    if (vars.size() > 1)
        throw UsageError("expected a univariate polynomial, found variables: " + vars[0] + ", " +
                         vars[1]);
    std::string var = vars.empty() ? "x" : vars[0];
    return expandUni(*tree, var);
}

} // namespace realroots
