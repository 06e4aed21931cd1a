#pragma once

#include <vector>

#include "realroots/errors.hpp"
#include "realroots/unipoly.hpp"

namespace realroots {

using SignSequence = std::vector<int>;
using PolySequence = std::vector<UniPoly>;

/// Number of adjacent sign changes after deleting zero entries.
inline int variations(const SignSequence& signs) {
    int count = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

inline int variations(const std::vector<Rational>& seq) {
    SignSequence signs;
    signs.reserve(seq.size());
    for (const auto& q : seq) signs.push_back(q.sign());
    return variations(signs);
}

/// var(f_bullet, a): variation of the evaluation signs at a, infinities included.
inline int variationsAt(const PolySequence& fs, const ExtendedPoint& a) {
    SignSequence signs;
    signs.reserve(fs.size());
    for (const auto& f : fs) signs.push_back(f.evalSign(a));
    return variations(signs);
}

/// Descartes bound: at least the number of positive roots counted with
/// multiplicity, and exceeds it by an even number.
inline int descartesBound(const UniPoly& f) {
    if (f.isZero()) throw ZeroPolynomial("descartesBound");
    return variations(f.coeffs());
}

/// The derivative tower (f, f', ..., f^(deg f)).
inline PolySequence derivativeSequence(const UniPoly& f) {
    PolySequence d{f};
    while (!d.back().isConstant()) d.push_back(d.back().derivative());
    return d;
}

/// Budan-Fourier bound on the number of roots in (a,b] with multiplicity;
/// exceeds the true count by an even number.
inline int budanFourierBound(const UniPoly& f, const ExtendedPoint& a, const ExtendedPoint& b) {
    if (f.isZero()) throw ZeroPolynomial("budanFourierBound");
    if (!(a < b)) throw BadInterval();
    PolySequence d = derivativeSequence(f);
    return variationsAt(d, a) - variationsAt(d, b);
}

/// Sylvester sequence Syl(f,g) = (f, f'*g, ...): each subsequent element is
/// the negated division remainder of its two predecessors; stops at the last
/// nonzero remainder, which is gcd(f, f'*g) up to a scalar.
inline PolySequence sylvesterSequence(const UniPoly& f, const UniPoly& g) {
    if (f.isZero()) throw ZeroPolynomial("sylvesterSequence");
    UniPoly f1 = f.derivative() * g;
    if (f1.isZero()) throw DegenerateSequence();
    PolySequence seq{f, f1};
    while (true) {
        UniPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.isZero()) break;
        seq.push_back(-r);
    }
    return seq;
}

/// Sylvester sequence divided through by its last element; ends in the
/// constant 1, and no two consecutive elements share a root.
inline PolySequence reducedSylvesterSequence(const UniPoly& f, const UniPoly& g) {
    PolySequence seq = sylvesterSequence(f, g);
    const UniPoly last = seq.back();
    if (last.isConstant()) {
        // Dividing by a constant only rescales; normalize the tail to 1.
        for (auto& p : seq) p = last.coeff(0).inverse() * p;
        return seq;
    }
    // last = gcd(f, f'g) divides every element of the sequence
    for (auto& p : seq) p = divmod(p, last).first;
    return seq;
}

namespace detail {

/// Reduced Sylvester sequence with every element divided by its content
/// (primitive PRS). Positive rescaling leaves every pointwise sign pattern
/// intact while keeping coefficient growth polynomial, so counting routines
/// use this chain instead of the literal one.
inline PolySequence normalizedReducedChain(const UniPoly& f, const UniPoly& g) {
    if (f.isZero()) throw ZeroPolynomial("sylvesterSequence");
    UniPoly f1 = f.derivative() * g;
    if (f1.isZero()) throw DegenerateSequence();
    PolySequence seq{f.primitivePart(), f1.primitivePart()};
    while (true) {
        UniPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.isZero()) break;
        seq.push_back((-r).primitivePart());
    }
    const UniPoly last = seq.back();
    if (!last.isConstant())
        for (auto& p : seq) p = divmod(p, last).first.primitivePart();
    // align the tail's sign with the constant-1 convention
    if (seq.back().coeff(0).sign() < 0)
        for (auto& p : seq) p = -p;
    return seq;
}

/// var(seq, a) - var(seq, b) for the reduced Sylvester sequence of (f, g).
inline int reducedVariationDrop(const UniPoly& f, const UniPoly& g, const ExtendedPoint& a,
                                const ExtendedPoint& b) {
    PolySequence seq = normalizedReducedChain(f, g);
    return variationsAt(seq, a) - variationsAt(seq, b);
}

} // namespace detail

/// Sylvester's count: #{roots of f in (a,b] with g > 0} minus
/// #{roots of f in [a,b) with g < 0}, roots counted without multiplicity.
/// With `multiplicity` set, the gcd recursion reweights each interior root by
/// its multiplicity in f (the convention at roots lying exactly on a or b
/// follows the same endpoint asymmetry at every recursion level).
inline int sylvesterCount(const UniPoly& f, const UniPoly& g, const ExtendedPoint& a,
                          const ExtendedPoint& b, bool multiplicity = false) {
    if (f.isZero()) throw ZeroPolynomial("sylvesterCount");
    if (!(a < b)) throw BadInterval();
    if (f.isConstant()) return 0;
    int count = detail::reducedVariationDrop(f, g, a, b);
    if (multiplicity) {
        UniPoly k = gcd(f, f.derivative());
        if (!k.isConstant()) count += sylvesterCount(k, g, a, b, true);
    }
    return count;
}

/// Number of roots of f in (a,b], or in [a,b) when leftClosed. Distinct roots
/// by default; with `multiplicity`, the recursion on gcd(f, f') adds each
/// root's excess multiplicity.
inline int sturmCount(const UniPoly& f, const ExtendedPoint& a, const ExtendedPoint& b,
                      bool multiplicity = false, bool leftClosed = false) {
    if (f.isZero()) throw ZeroPolynomial("sturmCount");
    if (!(a < b)) throw BadInterval();
    if (f.isConstant()) return 0;
    int count;
    if (!leftClosed) {
        count = detail::reducedVariationDrop(f, UniPoly::constant(1, f.variableName()), a, b);
    } else {
        // With g = -1 the Sylvester count is -#{roots in [a,b)}.
        count = -detail::reducedVariationDrop(f, UniPoly::constant(-1, f.variableName()), a, b);
    }
    if (multiplicity) {
        UniPoly k = gcd(f, f.derivative());
        if (!k.isConstant()) count += sturmCount(k, a, b, true, leftClosed);
    }
    return count;
}

/// Total count over the whole real line.
inline int sturmCount(const UniPoly& f, bool multiplicity = false) {
    return sturmCount(f, ExtendedPoint::negInfinity(), ExtendedPoint::posInfinity(),
                      multiplicity);
}

} // namespace realroots
