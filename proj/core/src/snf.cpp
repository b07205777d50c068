#include "latref/snf.hpp"

namespace latref {

std::vector<Int> SmithForm::invariant_factors() const {
    std::vector<Int> f;
    std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (d(i, i) != 0) f.push_back(d(i, i));
    return f;
}

SmithForm smith_normal_form(const IMat& a) {
    std::size_t m = a.rows(), n = a.cols();
    SmithForm s{a, IMat::identity(m), IMat::identity(n)};
    IMat& d = s.d;

    auto row_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n; ++k) std::swap(d(i, k), d(j, k));
        for (std::size_t k = 0; k < m; ++k) std::swap(s.u(i, k), s.u(j, k));
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < m; ++k) std::swap(d(k, i), d(k, j));
        for (std::size_t k = 0; k < n; ++k) std::swap(s.v(k, i), s.v(k, j));
    };
    auto row_sub = [&](std::size_t i, std::size_t j, const Int& q) {  // row i -= q * row j
        for (std::size_t k = 0; k < n; ++k) d(i, k) -= q * d(j, k);
        for (std::size_t k = 0; k < m; ++k) s.u(i, k) -= q * s.u(j, k);
    };
    auto col_sub = [&](std::size_t i, std::size_t j, const Int& q) {  // col i -= q * col j
        for (std::size_t k = 0; k < m; ++k) d(k, i) -= q * d(k, j);
        for (std::size_t k = 0; k < n; ++k) s.v(k, i) -= q * s.v(k, j);
    };
    auto row_neg = [&](std::size_t i) {
        for (std::size_t k = 0; k < n; ++k) d(i, k) = -d(i, k);
        for (std::size_t k = 0; k < m; ++k) s.u(i, k) = -s.u(i, k);
    };

    std::size_t r = std::min(m, n);
    for (std::size_t t = 0; t < r; ++t) {
        // pick the smallest nonzero pivot in the trailing block
        std::size_t pi = m, pj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (d(i, j) != 0 && (pi == m || abs(d(i, j)) < abs(d(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi == m) break;
        if (pi != t) row_swap(t, pi);
        if (pj != t) col_swap(t, pj);

        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0) continue;
                Int q = d(i, t) / d(t, t);
                row_sub(i, t, q);
                if (d(i, t) != 0) {  // remainder smaller than pivot: promote it
                    row_swap(t, i);
                    again = true;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0) continue;
                Int q = d(t, j) / d(t, t);
                col_sub(j, t, q);
                if (d(t, j) != 0) {
                    col_swap(t, j);
                    again = true;
                }
            }
        }
        if (d(t, t) < 0) row_neg(t);
    }

    // enforce the divisibility chain
    for (std::size_t t = 0; t + 1 < r; ++t) {
        for (std::size_t k = t + 1; k < r; ++k) {
            if (d(t, t) == 0 || d(k, k) == 0) continue;
            if (d(k, k) % d(t, t) == 0) continue;
            // fold entry (k,k) into row t and redo the local reduction
            for (std::size_t c = 0; c < m; ++c) s.u(t, c) += s.u(k, c);
            for (std::size_t c = 0; c < n; ++c) d(t, c) += d(k, c);
            // re-eliminate the 2x2 block the hard way: restart outer pass
            SmithForm fresh = smith_normal_form(s.d);
            s.d = fresh.d;
            s.u = fresh.u * s.u;
            s.v = s.v * fresh.v;
            return s;
        }
    }
    return s;
}

IMat integer_kernel(const IMat& a) {
    SmithForm s = smith_normal_form(a);
    std::size_t n = a.cols();
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(a.rows(), n); ++i)
        if (s.d(i, i) != 0) ++r;
    IMat k(n, n - r);
    for (std::size_t j = r; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) k(i, j - r) = s.v(i, j);
    return k;
}

IMat column_lattice_basis(const IMat& gens) {
    // HNF-style column reduction (see also the SNF routine; this keeps columns only)
    IMat m = gens;
    std::size_t rows = m.rows(), cols = m.cols();
    std::size_t j = 0;
    for (std::size_t i = 0; i < rows && j < cols; ++i) {
        // gcd out row i across columns >= j
        for (;;) {
            std::size_t piv = cols;
            for (std::size_t c = j; c < cols; ++c)
                if (m(i, c) != 0 && (piv == cols || abs(m(i, c)) < abs(m(i, piv)))) piv = c;
            if (piv == cols) break;
            if (piv != j)
                for (std::size_t r = 0; r < rows; ++r) std::swap(m(r, j), m(r, piv));
            bool clean = true;
            for (std::size_t c = j + 1; c < cols; ++c) {
                if (m(i, c) == 0) continue;
                Int q = m(i, c) / m(i, j);
                for (std::size_t r = 0; r < rows; ++r) m(r, c) -= q * m(r, j);
                if (m(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (m(i, j) != 0) ++j;
    }
    // drop zero columns beyond j
    IMat b(rows, j);
    for (std::size_t c = 0; c < j; ++c)
        for (std::size_t r = 0; r < rows; ++r) b(r, c) = m(r, c);
    return b;
}

}  // namespace latref
