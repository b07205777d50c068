#include "latref/shortvec.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace latref {

namespace {

// exact fallback: recursion over an LDL^T decomposition in rational arithmetic
std::vector<IVec> enumerate_exact(const QMat& gram, const QVec& center, const Rat& value) {
    std::size_t n = gram.rows();
    QMat m = gram;
    QVec d(n);
    QMat L(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = m(i, i);
        if (d[i] <= 0) throw std::invalid_argument("enumerate_shifted needs a positive definite form");
        for (std::size_t j = i + 1; j < n; ++j) L(i, j) = m(i, j) / d[i];
        for (std::size_t a = i + 1; a < n; ++a)
            for (std::size_t b = i + 1; b < n; ++b) m(a, b) -= m(a, i) * m(i, b) / d[i];
    }

    std::vector<IVec> out;
    IVec x(n, Int(0));
    auto rec = [&](auto&& self, std::size_t lvl, const Rat& rem) -> void {
        std::size_t i = n - 1 - lvl;
        Rat shift = center[i];
        for (std::size_t j = i + 1; j < n; ++j) shift += L(i, j) * (Rat(x[j]) + center[j]);
        Rat bound = rem / d[i];  // (x_i + shift)^2 <= bound
        Int root = isqrt_floor(bound);
        Int mid = num(-shift) / den(-shift);  // rough center; boundary fixed below
        Int lo = mid - root - 2, hi = mid + root + 2;
        while ((Rat(lo) + shift) * (Rat(lo) + shift) > bound && lo <= hi) ++lo;
        while ((Rat(hi) + shift) * (Rat(hi) + shift) > bound && hi >= lo) --hi;
        for (Int xi = lo; xi <= hi; ++xi) {
            Rat t = Rat(xi) + shift;
            Rat r2 = rem - d[i] * t * t;
            if (r2 < 0) continue;
            x[i] = xi;
            if (lvl + 1 == n) {
                if (r2 == 0) out.push_back(x);
            } else {
                self(self, lvl + 1, r2);
            }
        }
        x[i] = 0;
    };
    rec(rec, 0, value);
    return out;
}

__int128 isqrt128(__int128 v) {
    if (v < 0) return -1;
    __int128 r = (__int128)std::sqrt((double)v);
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// fast path: everything rescaled to integers.  We look for u in s*Z^n + r
// with u^T G u = V; loop bounds come from a floating-point LDL^T with slack,
// the innermost coordinate is solved as an exact integer quadratic.
struct FastEnum {
    std::size_t n;
    std::vector<std::vector<std::int64_t>> g;  // integer Gram
    std::int64_t s;
    std::vector<std::int64_t> r;  // residues of the coset, in [0, s)
    std::int64_t V;
    std::vector<double> d;                  // LDL pivots
    std::vector<std::vector<double>> L;
    std::vector<std::int64_t> u;
    std::vector<std::int64_t> gb;           // G * (fixed part of u)
    std::int64_t qsum = 0;                  // quadratic form on the fixed part
    std::vector<std::vector<std::int64_t>> found;

    bool decompose() {
        std::vector<std::vector<double>> m(n, std::vector<double>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] = (double)g[i][j];
        d.assign(n, 0);
        L.assign(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i) {
            d[i] = m[i][i];
            if (d[i] <= 1e-9) return false;
            for (std::size_t j = i + 1; j < n; ++j) L[i][j] = m[i][j] / d[i];
            for (std::size_t a = i + 1; a < n; ++a)
                for (std::size_t b = i + 1; b < n; ++b) m[a][b] -= m[a][i] * m[i][b] / d[i];
        }
        // keep all coordinates small enough that the exact leaf arithmetic
        // stays far from 64-bit limits
        double dmin = *std::min_element(d.begin(), d.end());
        double lmax = 0;
        for (const auto& row : L)
            for (double x : row) lmax = std::max(lmax, std::abs(x));
        double reach = std::sqrt((double)V / dmin) * std::pow(1.0 + lmax * n, (double)n);
        return reach < 1e7;
    }

    void fix(std::size_t i, std::int64_t ui) {
        qsum += g[i][i] * ui * ui + 2 * ui * gb[i];
        for (std::size_t j = 0; j < n; ++j) gb[j] += g[j][i] * ui;
        u[i] = ui;
    }
    void unfix(std::size_t i) {
        std::int64_t ui = u[i];
        for (std::size_t j = 0; j < n; ++j) gb[j] -= g[j][i] * ui;
        qsum -= g[i][i] * ui * ui + 2 * ui * gb[i];
        u[i] = 0;
    }

    void leaf() {
        // a*u0^2 + 2*b*u0 + (qsum - V) = 0
        std::int64_t a = g[0][0], b = gb[0];
        __int128 disc = (__int128)b * b - (__int128)a * (qsum - V);
        if (disc < 0) return;
        __int128 t = isqrt128(disc);
        if (t * t != disc) return;
        for (int sgn : {-1, 1}) {
            __int128 numer = -(__int128)b + sgn * t;
            if (numer % a != 0) continue;
            __int128 u0 = numer / a;
            std::int64_t uu = (std::int64_t)u0;
            std::int64_t res = ((uu % s) + s) % s;
            if (res != r[0]) continue;
            u[0] = uu;
            found.push_back(u);
            u[0] = 0;
            if (t == 0) break;  // double root
        }
    }

    void rec(std::size_t i, double rem) {
        if (i == 0) {
            leaf();
            return;
        }
        double shift = 0;
        for (std::size_t j = i + 1; j < n; ++j) shift += L[i][j] * (double)u[j];
        double halfwidth = std::sqrt(std::max(rem, 0.0) / d[i]) + 2.0;
        std::int64_t lo = (std::int64_t)std::floor(-halfwidth - shift);
        std::int64_t hi = (std::int64_t)std::ceil(halfwidth - shift);
        // align to the congruence class
        std::int64_t off = ((r[i] - lo) % s + s) % s;
        for (std::int64_t ui = lo + off; ui <= hi; ui += s) {
            double t = (double)ui + shift;
            fix(i, ui);
            rec(i - 1, rem - d[i] * t * t);
            unfix(i);
        }
    }
};

}  // namespace

std::vector<IVec> enumerate_shifted(const QMat& gram, const QVec& center, const Rat& value) {
    std::size_t n = gram.rows();
    if (value < 0) return {};
    if (n == 0) return value == 0 ? std::vector<IVec>{IVec{}} : std::vector<IVec>{};

    // coset scale s: u = s*(x + center) is integral for integer x;
    // form scale t: t*gram is an integer matrix
    Int s = 1, t = 1;
    for (std::size_t i = 0; i < n; ++i) s = lcm(s, den(center[i]));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t = lcm(t, den(gram(i, j)));
    Rat vscaled = value * s * s * t;  // = u^T (t*gram) u for any solution
    std::vector<IVec> out;
    if (den(vscaled) != 1) return {};  // integer left side can never match

    bool fast = n <= 8 && s <= 100000 && num(vscaled) < Int(1) << 45;
    if (fast)
        for (std::size_t i = 0; i < n && fast; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (abs(num(gram(i, j)) * t / den(gram(i, j))) > 1000000) {
                    fast = false;
                    break;
                }

    if (fast) {
        FastEnum fe;
        fe.n = n;
        fe.s = s.convert_to<std::int64_t>();
        fe.V = num(vscaled).convert_to<std::int64_t>();
        fe.g.assign(n, std::vector<std::int64_t>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                fe.g[i][j] = Int(num(gram(i, j)) * t / den(gram(i, j))).convert_to<std::int64_t>();
        fe.r.resize(n);
        std::vector<Int> sc(n);
        for (std::size_t i = 0; i < n; ++i) {
            sc[i] = num(center[i]) * s / den(center[i]);
            fe.r[i] = Int(((sc[i] % s) + s) % s).convert_to<std::int64_t>();
        }
        fe.u.assign(n, 0);
        fe.gb.assign(n, 0);
        if (fe.decompose()) {
            fe.rec(n - 1, (double)fe.V);
            for (const auto& uvec : fe.found) {
                IVec x(n);
                for (std::size_t i = 0; i < n; ++i) {
                    Int diff = Int(uvec[i]) - sc[i];
                    if (diff % s != 0) throw std::logic_error("enumerated vector escaped its coset");
                    x[i] = diff / s;
                }
                out.push_back(x);
            }
        } else {
            fast = false;
        }
    }
    if (!fast) out = enumerate_exact(gram, center, value);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace latref
