#include "latref/local.hpp"

#include <algorithm>
#include <functional>

namespace latref {

namespace {

// valuation of a nonzero rational at p
int val_p(const Rat& x, const Int& p) { return v_p(num(x), p) - v_p(den(x), p); }

// the unit part of x at p, reduced modulo p^k (as a positive integer < p^k)
Int unit_mod(const Rat& x, const Int& p, int k) {
    Int pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    Int n = num(x), d = den(x);
    while (n % p == 0) n /= p;
    while (d % p == 0) d /= p;
    n %= pk;
    if (n < 0) n += pk;
    d %= pk;
    if (d < 0) d += pk;
    // invert d mod pk by extended Euclid
    Int t = 0, newt = 1, r = pk, newr = d;
    while (newr != 0) {
        Int q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (t < 0) t += pk;
    return (n * t) % pk;
}

Int powmod(Int base, Int exp, const Int& mod) {
    Int r = 1;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp % 2 == 1) r = r * base % mod;
        base = base * base % mod;
        exp /= 2;
    }
    return r;
}

// Legendre symbol (u|p) for p odd, u a unit
int legendre(const Int& u, const Int& p) {
    Int e = powmod(u, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol arguments must be nonzero");
    if (v.infinite) return (a < 0 && b < 0) ? -1 : 1;
    const Int& p = v.p;
    int alpha = val_p(a, p), beta = val_p(b, p);
    if (p == 2) {
        Int u = unit_mod(a, 2, 3), w = unit_mod(b, 2, 3);  // odd parts mod 8
        auto eps = [](const Int& x) { return int((x - 1) / 2 % 2); };      // x mod 4 character
        auto omega = [](const Int& x) { return int((x * x - 1) / 8 % 2); };  // x mod 8 character
        int e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
        return e % 2 == 0 ? 1 : -1;
    }
    Int u = unit_mod(a, p, 1), w = unit_mod(b, p, 1);
    int e = (alpha % 2) * (beta % 2) * int((p - 1) / 2 % 2);
    int s = e % 2 == 0 ? 1 : -1;
    if (beta % 2) s *= legendre(u, p);
    if (alpha % 2) s *= legendre(w, p);
    return s;
}

bool is_local_square(const Rat& x, const Place& v) {
    if (x == 0) throw std::invalid_argument("square test of zero");
    if (v.infinite) return x > 0;
    const Int& p = v.p;
    if (val_p(x, p) % 2 != 0) return false;
    if (p == 2) return unit_mod(x, 2, 3) == 1;  // unit squares are 1 mod 8
    return legendre(unit_mod(x, p, 1), p) == 1;
}

int hasse_invariant(const DiagonalForm& f, const Place& v) {
    int s = 1;
    for (std::size_t i = 0; i < f.entries.size(); ++i)
        for (std::size_t j = i + 1; j < f.entries.size(); ++j)
            s *= hilbert_symbol(f.entries[i], f.entries[j], v);
    return s;
}

DiagonalForm diagonalize_over_Q(const GramMatrix& g) {
    QVec d = congruence_diagonal(to_rational(g.entries()));
    for (const auto& x : d)
        if (x == 0) throw DegenerateLattice("degenerate form cannot be diagonalized");
    return {d};
}

bool is_anisotropic_local_rank4(const DiagonalForm& f, const Place& v) {
    if (f.entries.size() != 4) throw RankMismatch("local rank-4 anisotropy test needs 4 entries");
    if (v.infinite) throw std::invalid_argument("finite place expected");
    Rat d = 1;
    for (const auto& x : f.entries) d *= x;
    if (!is_local_square(d, v)) return false;
    return hasse_invariant(f, v) == -hilbert_symbol(-1, -1, v);
}

bool is_anisotropic_over_Q(const DiagonalForm& f) {
    if (f.entries.size() != 4) throw RankMismatch("rank-4 anisotropy test needs 4 entries");
    bool pos = false, neg = false;
    for (const auto& x : f.entries) (x > 0 ? pos : neg) = true;
    if (!(pos && neg)) return true;  // definite: anisotropic at the real place
    // finite places: only p | 2*d can carry an anisotropy witness
    Rat d = 1;
    for (const auto& x : f.entries) d *= x;
    Int screen = 2 * num(d) * den(d);
    for (const auto& [p, e] : factorize(screen))
        if (is_anisotropic_local_rank4(f, Place::prime(p))) return true;
    return false;
}

bool is_anisotropic_over_Q(const QuadLattice& l) {
    if (l.rank() != 4) throw RankMismatch("rank-4 anisotropy test");
    return is_anisotropic_over_Q(diagonalize_over_Q(l.gram()));
}

bool rationally_equivalent(const QuadLattice& a, const QuadLattice& b) {
    if (a.rank() != b.rank()) throw RankMismatch("rational equivalence needs equal ranks");
    if (a.signature() != b.signature()) return false;
    if (squarefree_part(Rat(a.discriminant())) != squarefree_part(Rat(b.discriminant()))) return false;
    DiagonalForm fa = diagonalize_over_Q(a.gram()), fb = diagonalize_over_Q(b.gram());
    Int screen = 2 * a.discriminant() * b.discriminant();
    for (const auto& [p, e] : factorize(screen))
        if (hasse_invariant(fa, Place::prime(p)) != hasse_invariant(fb, Place::prime(p)))
            return false;
    return true;
}

namespace {

// backtracking search for U with U^T ga U = gb, columns bounded by the height budget
std::optional<IMat> search_certificate(const IMat& ga, const IMat& gb, long h) {
    std::size_t n = ga.rows();
    std::vector<Int> wanted;
    for (std::size_t i = 0; i < n; ++i) wanted.push_back(gb(i, i));

    std::vector<std::vector<IVec>> cands(n);
    IVec v(n, Int(0));
    // enumerate the coordinate box once, bucketing by norm; columns of a
    // unimodular matrix are primitive, so imprimitive vectors are skipped
    std::vector<long> c(n, -h);
    for (;;) {
        for (std::size_t i = 0; i < n; ++i) v[i] = c[i];
        Int q = inner(ga, v, v);
        for (std::size_t i = 0; i < n; ++i)
            if (q == wanted[i] && content(v) == 1) cands[i].push_back(v);
        std::size_t i = 0;
        while (i < n && ++c[i] > h) c[i++] = -h;
        if (i == n) break;
    }

    std::vector<IVec> cols;
    std::vector<IVec> garow;  // cached ga * column for fast pairing
    auto pairing = [&](const IVec& gax, const IVec& y) {
        Int s = 0;
        for (std::size_t i = 0; i < n; ++i) s += gax[i] * y[i];
        return s;
    };
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == n) return true;
        for (const auto& cand : cands[i]) {
            bool ok = true;
            for (std::size_t j = 0; j < i; ++j)
                if (pairing(garow[j], cand) != gb(j, i)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cols.push_back(cand);
            IVec r(n, Int(0));
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) r[x] += ga(x, y) * cand[y];
            garow.push_back(std::move(r));
            if (rec(i + 1)) return true;
            cols.pop_back();
            garow.pop_back();
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    IMat u(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) u(i, j) = cols[j][i];
    return u;
}

}  // namespace

IsomVerdict z_isomorphic(const QuadLattice& a, const QuadLattice& b, const Int& height_budget) {
    if (a.rank() != b.rank()) return IsomNo{"rank"};
    if (a.signature() != b.signature()) return IsomNo{"signature"};
    if (a.discriminant() != b.discriminant()) return IsomNo{"discriminant"};
    if (a.invariant_factors() != b.invariant_factors()) return IsomNo{"invariant_factors"};
    if (a.is_even() != b.is_even()) return IsomNo{"parity"};
    {
        DiagonalForm fa = diagonalize_over_Q(a.gram()), fb = diagonalize_over_Q(b.gram());
        Int screen = 2 * a.discriminant();
        for (const auto& [p, e] : factorize(screen))
            if (hasse_invariant(fa, Place::prime(p)) != hasse_invariant(fb, Place::prime(p)))
                return IsomNo{"hasse at p=" + p.str()};
    }

    std::size_t n = a.rank();
    const IMat& ga = a.gram().entries();
    const IMat& gb = b.gram().entries();
    long h = height_budget.convert_to<long>();

    auto verify = [&](const IMat& u) {
        if (!(u.transpose() * ga * u == gb)) throw std::logic_error("isometry certificate check failed");
    };
    if (auto u = search_certificate(ga, gb, h)) {
        verify(*u);
        return IsomYes{*u};
    }
    // a certificate is unimodular, so one found in the other direction inverts
    if (auto v = search_certificate(gb, ga, h)) {
        QMat vq = to_rational(*v);
        QMat wq = inverse(vq);
        IMat u(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (den(wq(i, j)) != 1) throw std::logic_error("certificate inverse is not integral");
                u(i, j) = num(wq(i, j));
            }
        verify(u);
        return IsomYes{u};
    }
    return IsomUnknown{};
}

}  // namespace latref
