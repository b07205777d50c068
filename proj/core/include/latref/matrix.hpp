#pragma once

#include "latref/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace latref {

// Dense matrix over an exact scalar (Int or Rat).  Dimensions stay small
// (<= rank of a lattice or the number of accepted roots), so no effort is
// spent on anything beyond straightforward O(n^3) algorithms.
template <typename T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, T(0)) {}
    Mat(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            for (const auto& x : row) a_.push_back(x);
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Mat p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& x = (*this)(i, k);
                if (x == T(0)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += x * o(k, j);
            }
        return p;
    }

    std::vector<T> operator*(const std::vector<T>& v) const {
        if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
        std::vector<T> out(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    Mat submatrix(const std::vector<std::size_t>& ri, const std::vector<std::size_t>& ci) const {
        Mat s(ri.size(), ci.size());
        for (std::size_t i = 0; i < ri.size(); ++i)
            for (std::size_t j = 0; j < ci.size(); ++j) s(i, j) = (*this)(ri[i], ci[j]);
        return s;
    }

    std::size_t rows_, cols_;
    std::vector<T> a_;
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;
using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

template <typename T>
Mat<T> operator-(const Mat<T>& m) {
    Mat<T> n(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) n(i, j) = -m(i, j);
    return n;
}

inline QMat to_rational(const IMat& m) {
    QMat q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rat(m(i, j));
    return q;
}

inline QVec to_rational(const IVec& v) {
    QVec q;
    q.reserve(v.size());
    for (const auto& x : v) q.emplace_back(x);
    return q;
}

// Exact determinant by Bareiss fraction-free elimination.
inline Int det(const IMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    IMat a = m;
    Int prev = 1;
    int sgn = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = k;
            while (piv < n && a(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sgn * a(n - 1, n - 1);
}

inline Rat det(const QMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    std::size_t n = m.rows();
    QMat a = m;
    Rat d = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            d = -d;
        }
        d *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            Rat f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return d;
}

// Rational inverse via Gauss-Jordan.
inline QMat inverse(const QMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = m.rows();
    QMat a = m, inv = QMat::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k) == 0) ++piv;
        if (piv == n) throw DegenerateLattice("singular matrix has no inverse");
        if (piv != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(piv, j));
                std::swap(inv(k, j), inv(piv, j));
            }
        Rat p = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= p;
            inv(k, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Rat f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

// Symmetric congruence diagonalization over Q with zero-pivot repair.
// Returns the diagonal entries of D = P^T M P (P itself is not needed by callers).
inline QVec congruence_diagonal(const QMat& m_in) {
    if (!m_in.is_symmetric()) throw std::invalid_argument("congruence_diagonal needs symmetric input");
    QMat m = m_in;
    std::size_t n = m.rows();
    auto sym_row_col_add = [&](std::size_t dst, std::size_t src, const Rat& f) {
        for (std::size_t j = 0; j < n; ++j) m(dst, j) += f * m(src, j);
        for (std::size_t i = 0; i < n; ++i) m(i, dst) += f * m(i, src);
    };
    auto sym_swap = [&](std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < n; ++j) std::swap(m(a, j), m(b, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(m(i, a), m(i, b));
    };
    for (std::size_t k = 0; k < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t d = k + 1;
            while (d < n && m(d, d) == 0) ++d;
            if (d < n) {
                sym_swap(k, d);
            } else {
                // all remaining diagonal zero; bring in an off-diagonal if any
                std::size_t bi = n, bj = n;
                for (std::size_t i = k; i < n && bi == n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        if (m(i, j) != 0) {
                            bi = i;
                            bj = j;
                            break;
                        }
                if (bi == n) break;  // remaining block is zero
                sym_row_col_add(bi, bj, 1);  // (e_i + e_j) has norm 2*m(i,j) != 0
                sym_swap(k, bi);
            }
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            sym_row_col_add(i, k, -m(i, k) / m(k, k));
        }
    }
    QVec d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = m(i, i);
    return d;
}

inline Rat inner(const QMat& g, const QVec& x, const QVec& y) {
    Rat s = 0;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < g.cols(); ++j) s += x[i] * g(i, j) * y[j];
    }
    return s;
}

inline Int inner(const IMat& g, const IVec& x, const IVec& y) {
    Int s = 0;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < g.cols(); ++j) s += x[i] * g(i, j) * y[j];
    }
    return s;
}

}  // namespace latref
