#pragma once

#include <set>
#include <utility>
#include <vector>

#include "realroots/errors.hpp"
#include "realroots/multipoly.hpp"

namespace realroots {

/// Interreduced Groebner basis with monic leading coefficients; unique for a
/// given ideal and order.
struct GroebnerBasis {
    std::vector<MultiPoly> generators;
    MonomialOrder order;
    std::vector<std::string> vars;
};

/// Remainder of f under multivariate division by the basis: no term of the
/// result is divisible by any leading monomial, and f - result lies in the
/// ideal. Deterministic: always cancels the order-largest reducible term
/// against the first matching divisor.
inline MultiPoly normalForm(const MultiPoly& f, const GroebnerBasis& gb) {
    MultiPoly h = f.order() == gb.order ? f : f.withOrder(gb.order);
    MultiPoly r = MultiPoly::zero(h.vars(), gb.order);
    while (!h.isZero()) {
        const auto& lt = h.terms().front();
        bool reduced = false;
        for (const auto& g : gb.generators) {
            if (!g.leadingMonomial().divides(lt.monomial)) continue;
            Rational c = lt.coeff / g.leadingCoeff();
            h = h - g.timesTerm(c, lt.monomial / g.leadingMonomial());
            reduced = true;
            break;
        }
        if (!reduced) {
            r = r + MultiPoly::fromTerms({{lt.monomial, lt.coeff}}, h.vars(), gb.order);
            h = h - MultiPoly::fromTerms({{lt.monomial, lt.coeff}}, h.vars(), gb.order);
        }
    }
    return r;
}

/// S(f,g) = (lcm/lt(f))*f - (lcm/lt(g))*g; both leading terms cancel.
inline MultiPoly sPolynomial(const MultiPoly& f, const MultiPoly& g) {
    Monomial l = lcm(f.leadingMonomial(), g.leadingMonomial());
    MultiPoly a = f.timesTerm(f.leadingCoeff().inverse(), l / f.leadingMonomial());
    MultiPoly b = g.timesTerm(g.leadingCoeff().inverse(), l / g.leadingMonomial());
    return a - b;
}

/// Buchberger's algorithm with the coprime-lead and chain criteria and
/// normal (smallest-lcm) pair selection, followed by interreduction.
inline GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, MonomialOrder order) {
    std::vector<MultiPoly> basis;
    std::vector<std::string> vars;
    for (const auto& g : gens) {
        if (vars.empty()) vars = g.vars();
        if (!g.isZero()) basis.push_back(g.withOrder(order).monic());
    }
    if (basis.empty()) throw AllZeroGenerators();

    GroebnerBasis gb{basis, order, vars};

    using Pair = std::pair<std::size_t, std::size_t>;
    std::set<Pair> pending;
    auto addPairsFor = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) pending.insert({i, k});
    };
    for (std::size_t k = 1; k < gb.generators.size(); ++k) addPairsFor(k);

    auto lm = [&](std::size_t i) -> const Monomial& { return gb.generators[i].leadingMonomial(); };

    while (!pending.empty()) {
        // normal selection: smallest lcm in the order
        auto best = pending.begin();
        Monomial bestLcm = lcm(lm(best->first), lm(best->second));
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Monomial l = lcm(lm(it->first), lm(it->second));
            if (order.less(l, bestLcm)) {
                best = it;
                bestLcm = l;
            }
        }
        auto [i, j] = *best;
        pending.erase(best);

        // coprime-lead criterion
        if (bestLcm == lm(i) * lm(j)) continue;
        // chain criterion: some k with lm(k) | lcm and both companion pairs
        // already handled
        bool skip = false;
        for (std::size_t k = 0; k < gb.generators.size() && !skip; ++k) {
            if (k == i || k == j || !lm(k).divides(bestLcm)) continue;
            Pair ik{std::min(i, k), std::max(i, k)};
            Pair jk{std::min(j, k), std::max(j, k)};
            if (!pending.count(ik) && !pending.count(jk)) skip = true;
        }
        if (skip) continue;

        MultiPoly s = normalForm(sPolynomial(gb.generators[i], gb.generators[j]), gb);
        if (s.isZero()) continue;
        gb.generators.push_back(s.monic());
        addPairsFor(gb.generators.size() - 1);
    }

    // interreduce: drop generators whose lead another lead divides, then take
    // each one's normal form against the rest
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < gb.generators.size(); ++i) {
            GroebnerBasis others{{}, order, vars};
            for (std::size_t j = 0; j < gb.generators.size(); ++j)
                if (j != i) others.generators.push_back(gb.generators[j]);
            MultiPoly reduced = normalForm(gb.generators[i], others);
            if (reduced.isZero()) {
                gb.generators.erase(gb.generators.begin() +
                                    static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
            if (!(reduced.monic() == gb.generators[i])) {
                gb.generators[i] = reduced.monic();
                changed = true;
            }
        }
    }
    // canonical presentation: ascending leading monomials
    std::sort(gb.generators.begin(), gb.generators.end(),
              [&](const MultiPoly& a, const MultiPoly& b) {
                  return order.compare(a.leadingMonomial(), b.leadingMonomial()) < 0;
              });
    return gb;
}

} // namespace realroots
