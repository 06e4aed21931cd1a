#pragma once

#include <map>
#include <utility>
#include <vector>

#include "realroots/groebner.hpp"
#include "realroots/matrix.hpp"

namespace realroots {

/// The Artinian quotient R = K[x]/I presented by its standard-monomial basis
/// (monomials under the Groebner staircase, sorted ascending). Caches the
/// multiplication matrices of the variables and the trace functional at
/// construction; immutable afterwards.
class QuotientRing {
public:
    /// Throws NotZeroDimensional unless every variable has a pure power among
    /// the leading terms (the standard finiteness criterion).
    static QuotientRing standardBasis(GroebnerBasis gb) {
        QuotientRing r;
        r.gb_ = std::move(gb);
        std::size_t n = r.gb_.vars.size();

        bool unitIdeal = false;
        for (const auto& g : r.gb_.generators)
            if (g.leadingMonomial().isOne()) unitIdeal = true;

        if (!unitIdeal) {
            // box bound: the minimal pure power of each variable
            std::vector<unsigned> box(n, 0);
            for (std::size_t i = 0; i < n; ++i) {
                for (const auto& g : r.gb_.generators) {
                    const Monomial& m = g.leadingMonomial();
                    if (m.exponent(i) == 0) continue;
                    bool pure = true;
                    for (std::size_t k = 0; k < n; ++k)
                        if (k != i && m.exponent(k) != 0) pure = false;
                    if (pure && (box[i] == 0 || m.exponent(i) < box[i])) box[i] = m.exponent(i);
                }
                if (box[i] == 0) throw NotZeroDimensional();
            }

            std::vector<unsigned> exps(n, 0);
            r.enumerateStandard(box, exps, 0);
            std::sort(r.basis_.begin(), r.basis_.end(), [&](const Monomial& a, const Monomial& b) {
                return r.gb_.order.less(a, b);
            });
            for (std::size_t k = 0; k < r.basis_.size(); ++k) r.index_[r.basis_[k]] = k;
        }

        r.buildCaches();
        return r;
    }

    std::size_t dimension() const { return basis_.size(); }
    const std::vector<Monomial>& basis() const { return basis_; }
    const GroebnerBasis& gb() const { return gb_; }
    const std::vector<std::string>& vars() const { return gb_.vars; }
    const SquareMatrix& variableMatrix(std::size_t i) const { return varMatrices_[i]; }

    MultiPoly basisElement(std::size_t k) const {
        return MultiPoly::fromTerms({{basis_[k], Rational(1)}}, gb_.vars, gb_.order);
    }

    /// Coordinates of the normal form of f in the standard basis.
    std::vector<Rational> coords(const MultiPoly& f) const {
        MultiPoly nf = normalForm(f, gb_);
        std::vector<Rational> c(dimension(), Rational(0));
        for (const auto& t : nf.terms()) c[index_.at(t.monomial)] = t.coeff;
        return c;
    }

    /// Matrix of multiplication by f, assembled by substituting the cached
    /// variable matrices into f's terms.
    SquareMatrix matrixOf(const MultiPoly& f) const {
        std::size_t d = dimension();
        SquareMatrix acc(d);
        std::vector<std::vector<SquareMatrix>> powers(varMatrices_.size());
        for (std::size_t i = 0; i < varMatrices_.size(); ++i)
            powers[i].push_back(SquareMatrix::identity(d));
        auto power = [&](std::size_t i, unsigned e) -> const SquareMatrix& {
            while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * varMatrices_[i]);
            return powers[i][e];
        };
        for (const auto& t : f.terms()) {
            SquareMatrix m = SquareMatrix::identity(d);
            for (std::size_t i = 0; i < f.nvars(); ++i)
                if (unsigned e = t.monomial.exponent(i)) m = m * power(i, e);
            acc = acc + t.coeff * m;
        }
        return acc;
    }

    /// trace(m_f), via the cached per-basis-monomial traces; linear in f.
    Rational traceOf(const MultiPoly& f) const {
        std::vector<Rational> c = coords(f);
        Rational t(0);
        for (std::size_t k = 0; k < c.size(); ++k)
            if (!c[k].isZero()) t += c[k] * traceVec_[k];
        return t;
    }

private:
    QuotientRing() = default;

    void enumerateStandard(const std::vector<unsigned>& box, std::vector<unsigned>& exps,
                           std::size_t pos) {
        if (pos == box.size()) {
            Monomial m{std::vector<unsigned>(exps)};
            for (const auto& g : gb_.generators)
                if (g.leadingMonomial().divides(m)) return;
            basis_.push_back(m);
            return;
        }
        for (unsigned e = 0; e < box[pos]; ++e) {
            exps[pos] = e;
            enumerateStandard(box, exps, pos + 1);
        }
        exps[pos] = 0;
    }

    void buildCaches() {
        std::size_t d = dimension();
        std::size_t n = gb_.vars.size();
        varMatrices_.assign(n, SquareMatrix(d));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                Monomial xibj = Monomial::variable(i, n) * basis_[j];
                std::vector<Rational> col =
                    coords(MultiPoly::fromTerms({{xibj, Rational(1)}}, gb_.vars, gb_.order));
                for (std::size_t k = 0; k < d; ++k) varMatrices_[i].at(k, j) = col[k];
            }
        }
        traceVec_.assign(d, Rational(0));
        for (std::size_t k = 0; k < d; ++k) {
            // tau_k = trace(m_{b_k}): the j-th diagonal entry is the b_j
            // coordinate of NF(b_k * b_j)
            Rational t(0);
            for (std::size_t j = 0; j < d; ++j) {
                Monomial prod = basis_[k] * basis_[j];
                std::vector<Rational> col =
                    coords(MultiPoly::fromTerms({{prod, Rational(1)}}, gb_.vars, gb_.order));
                t += col[j];
            }
            traceVec_[k] = t;
        }
    }

    GroebnerBasis gb_;
    std::vector<Monomial> basis_;
    std::map<Monomial, std::size_t> index_;
    std::vector<SquareMatrix> varMatrices_;
    std::vector<Rational> traceVec_;
};

} // namespace realroots
