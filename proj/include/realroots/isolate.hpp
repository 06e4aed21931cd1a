#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <vector>

#include "realroots/dyadic.hpp"
#include "realroots/sturm.hpp"

namespace realroots {

/// Half-open interval (lo, hi] containing exactly one root of the subject
/// polynomial, annotated with that root's multiplicity.
struct IsolatingInterval {
    Dyadic lo;
    Dyadic hi;
    int multiplicity = 1;
};

namespace detail {

/// Sign-variation counter for one reduced Sturm sequence, memoized per endpoint.
class VariationTable {
public:
    explicit VariationTable(PolySequence seq) : seq_(std::move(seq)) {}

    int at(const Dyadic& p) {
        auto it = cache_.find(p);
        if (it != cache_.end()) return it->second;
        int v = variationsAt(seq_, ExtendedPoint(p.toRational()));
        cache_.emplace(p, v);
        return v;
    }

    int rootsIn(const Dyadic& lo, const Dyadic& hi) { return at(lo) - at(hi); }

private:
    PolySequence seq_;
    std::map<Dyadic, int> cache_;
};

/// Smallest power of two B = 2^k >= 1 + max |c_i / c_d|; all roots lie in (-B, B).
inline Dyadic cauchyBoundPowerOfTwo(const UniPoly& f) {
    Rational maxRatio(0);
    const Rational& lead = f.leadingCoeff();
    for (int i = 0; i < f.degree(); ++i) {
        Rational r = (f.coeff(static_cast<std::size_t>(i)) / lead).abs();
        maxRatio = std::max(maxRatio, r);
    }
    Rational bound = Rational(1) + maxRatio;
    long k = 0;
    while (Dyadic::powerOfTwo(k).toRational() < bound) ++k;
    return Dyadic::powerOfTwo(k);
}

} // namespace detail

/// Isolates the distinct real roots of f: disjoint dyadic intervals (lo, hi],
/// one root each, sorted ascending, each narrower than `tolerance` and
/// annotated with the root's multiplicity in f. Bisection runs on the
/// squarefree part, so per-interval Sturm counts stay stable; multiplicities
/// are recovered from the interval counts along the gcd chain f, gcd(f,f'), ...
inline std::vector<IsolatingInterval> realRootIsolation(const UniPoly& f,
                                                        const Rational& tolerance) {
    if (f.isZero()) throw ZeroPolynomial("realRootIsolation");
    if (tolerance.sign() <= 0) throw DomainError("realRootIsolation: tolerance must be positive");
    if (f.isConstant()) return {};

    const std::string& var = f.variableName();
    UniPoly fsq = f.squarefreePart();
    detail::VariationTable table(
        detail::normalizedReducedChain(fsq, UniPoly::constant(1, var)));

    struct WorkItem {
        Dyadic lo, hi;
        int count;
    };
    Dyadic bound = detail::cauchyBoundPowerOfTwo(fsq);
    std::deque<WorkItem> work{{-bound, bound, table.rootsIn(-bound, bound)}};
    std::vector<IsolatingInterval> isolated;

    while (!work.empty()) {
        WorkItem item = work.front();
        work.pop_front();
        if (item.count == 0) continue;
        if (item.count == 1 &&
            (item.hi - item.lo).toRational() < tolerance) {
            isolated.push_back({item.lo, item.hi, 1});
            continue;
        }
        Dyadic mid = midpoint(item.lo, item.hi);
        int leftCount = table.rootsIn(item.lo, mid);
        work.push_back({item.lo, mid, leftCount});
        work.push_back({mid, item.hi, item.count - leftCount});
    }

    std::sort(isolated.begin(), isolated.end(),
              [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });

    // Multiplicity of the root in (lo, hi]: how far down the chain
    // f, gcd(f, f'), gcd(gcd, gcd'), ... the interval still holds a root.
    std::vector<detail::VariationTable> chain;
    UniPoly h = f;
    while (!h.isConstant()) {
        chain.emplace_back(detail::normalizedReducedChain(h, UniPoly::constant(1, var)));
        UniPoly next = gcd(h, h.derivative());
        if (next.isConstant()) break;
        h = std::move(next);
    }
    for (auto& interval : isolated) {
        int mult = 0;
        for (auto& tbl : chain) mult += tbl.rootsIn(interval.lo, interval.hi);
        interval.multiplicity = mult;
    }
    return isolated;
}

} // namespace realroots
