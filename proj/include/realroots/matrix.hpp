#pragma once

#include <cstddef>
#include <iosfwd>
#include <sstream>
#include <string>
#include <vector>

#include "realroots/errors.hpp"
#include "realroots/rational.hpp"
#include "realroots/sturm.hpp"
#include "realroots/unipoly.hpp"

namespace realroots {

/// Dense square matrix over Rational, row-major. All operations exact.
class SquareMatrix {
public:
    SquareMatrix() : n_(0) {}
    explicit SquareMatrix(std::size_t n) : n_(n), a_(n * n, Rational(0)) {}

    static SquareMatrix identity(std::size_t n) {
        SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    std::size_t size() const { return n_; }
    Rational& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    friend SquareMatrix operator+(const SquareMatrix& x, const SquareMatrix& y) {
        SquareMatrix r(x.n_);
        for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] + y.a_[k];
        return r;
    }
    friend SquareMatrix operator-(const SquareMatrix& x, const SquareMatrix& y) {
        SquareMatrix r(x.n_);
        for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] - y.a_[k];
        return r;
    }
    friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
        SquareMatrix r(x.n_);
        for (std::size_t i = 0; i < x.n_; ++i)
            for (std::size_t k = 0; k < x.n_; ++k) {
                const Rational& xik = x.at(i, k);
                if (xik.isZero()) continue;
                for (std::size_t j = 0; j < x.n_; ++j) r.at(i, j) += xik * y.at(k, j);
            }
        return r;
    }
    friend SquareMatrix operator*(const Rational& s, const SquareMatrix& x) {
        SquareMatrix r(x.n_);
        for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = s * x.a_[k];
        return r;
    }
    friend bool operator==(const SquareMatrix& x, const SquareMatrix& y) {
        return x.n_ == y.n_ && x.a_ == y.a_;
    }

    Rational trace() const {
        Rational t(0);
        for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    bool isSymmetric() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if (!(at(i, j) == at(j, i))) return false;
        return true;
    }

    /// Exact determinant by Gaussian elimination with row swaps.
    Rational determinant() const {
        SquareMatrix m = *this;
        Rational det(1);
        for (std::size_t col = 0; col < n_; ++col) {
            std::size_t pivot = col;
            while (pivot < n_ && m.at(pivot, col).isZero()) ++pivot;
            if (pivot == n_) return Rational(0);
            if (pivot != col) {
                for (std::size_t j = 0; j < n_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
                det = -det;
            }
            det *= m.at(col, col);
            Rational inv = m.at(col, col).inverse();
            for (std::size_t i = col + 1; i < n_; ++i) {
                if (m.at(i, col).isZero()) continue;
                Rational factor = m.at(i, col) * inv;
                for (std::size_t j = col; j < n_; ++j)
                    m.at(i, j) -= factor * m.at(col, j);
            }
        }
        return det;
    }

    /// Exact rank by Gaussian elimination.
    std::size_t rank() const {
        SquareMatrix m = *this;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < n_ && rank < n_; ++col) {
            std::size_t pivot = rank;
            while (pivot < n_ && m.at(pivot, col).isZero()) ++pivot;
            if (pivot == n_) continue;
            if (pivot != rank)
                for (std::size_t j = 0; j < n_; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
            Rational inv = m.at(rank, col).inverse();
            for (std::size_t i = rank + 1; i < n_; ++i) {
                if (m.at(i, col).isZero()) continue;
                Rational factor = m.at(i, col) * inv;
                for (std::size_t j = col; j < n_; ++j)
                    m.at(i, j) -= factor * m.at(rank, j);
            }
            ++rank;
        }
        return rank;
    }

    std::string toString() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < n_; ++i) {
            os << "[";
            for (std::size_t j = 0; j < n_; ++j) {
                if (j) os << ", ";
                os << at(i, j).toString();
            }
            os << "]";
            if (i + 1 < n_) os << "\n";
        }
        return os.str();
    }

private:
    std::size_t n_;
    std::vector<Rational> a_;
};

/// Characteristic polynomial det(T*Id - M), monic of degree n, by the
/// Faddeev-LeVerrier recursion (exact over Q).
inline UniPoly charPoly(const SquareMatrix& M, const std::string& var = "T") {
    std::size_t n = M.size();
    std::vector<Rational> coeffs(n + 1, Rational(0));
    coeffs[n] = Rational(1);
    SquareMatrix B = SquareMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        SquareMatrix C = M * B;
        Rational a = -(C.trace() / Rational(static_cast<long>(k)));
        coeffs[n - k] = a;
        B = C + a * SquareMatrix::identity(n);
    }
    return UniPoly(std::move(coeffs), var);
}

/// Minimal polynomial: the first power of M linearly dependent on the lower
/// ones, found by exact elimination on the vectorized powers.
inline UniPoly minPoly(const SquareMatrix& M, const std::string& var = "T") {
    std::size_t n = M.size();
    if (n == 0) return UniPoly::constant(1, var);
    std::size_t dim = n * n;

    // Row-reduced basis of the span of vec(M^0..M^{k-1}), with bookkeeping of
    // the power-combination that produced each reduced row.
    std::vector<std::vector<Rational>> rows;    // reduced vectors
    std::vector<std::vector<Rational>> combos;  // coefficients in terms of powers
    std::vector<std::size_t> pivots;

    SquareMatrix P = SquareMatrix::identity(n);
    for (std::size_t k = 0;; ++k) {
        std::vector<Rational> v(dim);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v[i * n + j] = P.at(i, j);
        std::vector<Rational> combo(k + 1, Rational(0));
        combo[k] = Rational(1);

        for (std::size_t r = 0; r < rows.size(); ++r) {
            Rational c = v[pivots[r]];
            if (c.isZero()) continue;
            for (std::size_t t = 0; t < dim; ++t) v[t] -= c * rows[r][t];
            for (std::size_t t = 0; t < combos[r].size(); ++t) combo[t] -= c * combos[r][t];
        }

        std::size_t piv = dim;
        for (std::size_t t = 0; t < dim; ++t)
            if (!v[t].isZero()) {
                piv = t;
                break;
            }
        if (piv == dim) {
            // M^k = -sum combo[j] M^j for j < k; minimal polynomial found.
            std::vector<Rational> cs(combo.begin(), combo.end());
            return UniPoly(std::move(cs), var).monic();
        }
        Rational inv = v[piv].inverse();
        for (auto& t : v) t = inv * t;
        for (auto& t : combo) t = inv * t;
        rows.push_back(std::move(v));
        combos.push_back(std::move(combo));
        pivots.push_back(piv);
        P = P * M;
    }
}

/// Symmetric bilinear form over Q. Symmetry is validated at construction;
/// rank and signature are its two basis-independent invariants.
class SymBilinearForm {
public:
    explicit SymBilinearForm(SquareMatrix m) : m_(std::move(m)) {
        if (!m_.isSymmetric()) throw DomainError("SymBilinearForm: matrix is not symmetric");
    }

    std::size_t dimension() const { return m_.size(); }
    const SquareMatrix& matrix() const { return m_; }
    const Rational& at(std::size_t i, std::size_t j) const { return m_.at(i, j); }

private:
    SquareMatrix m_;
};

/// Rank over Q, by exact elimination.
inline std::size_t rank(const SymBilinearForm& s) { return s.matrix().rank(); }

/// #positive - #negative eigenvalues. A symmetric rational matrix has a
/// real-rooted characteristic polynomial, so Descartes' rule is exact on it:
/// positive eigenvalues are the variations of chi(T), negative those of chi(-T).
inline int signature(const SymBilinearForm& s) {
    if (s.dimension() == 0) return 0;
    UniPoly chi = charPoly(s.matrix());
    return descartesBound(chi) - descartesBound(chi.reflected());
}

inline std::ostream& operator<<(std::ostream& os, const SquareMatrix& m) {
    return os << m.toString();
}

} // namespace realroots
