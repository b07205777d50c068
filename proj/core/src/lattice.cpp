#include "latref/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace latref {

GramMatrix::GramMatrix(IMat entries) : m_(std::move(entries)) {
    if (!m_.is_symmetric()) throw std::invalid_argument("Gram matrix must be symmetric");
    if (det(m_) == 0) throw DegenerateLattice("Gram matrix is degenerate");
}

std::vector<Int> invariant_factors(const GramMatrix& g) {
    return smith_normal_form(g.entries()).invariant_factors();
}

std::pair<int, int> signature(const GramMatrix& g) {
    QVec d = congruence_diagonal(to_rational(g.entries()));
    int p = 0, q = 0;
    for (const auto& x : d) {
        if (x > 0)
            ++p;
        else if (x < 0)
            ++q;
        else
            throw DegenerateLattice("zero in congruence diagonal");
    }
    return {p, q};
}

QuadLattice::QuadLattice(GramMatrix gram)
    : gram_(std::move(gram)),
      disc_(det(gram_.entries())),
      sig_(latref::signature(gram_)),
      factors_(latref::invariant_factors(gram_)) {}

bool QuadLattice::is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
        if (gram_(i, i) % 2 != 0) return false;
    return true;
}

Int discriminant(const QuadLattice& l) { return l.discriminant(); }

DualBasis dual_lattice(const QuadLattice& l) {
    return {inverse(to_rational(l.gram().entries())), abs(l.discriminant())};
}

std::pair<QuadLattice, int> even_sublattice(const QuadLattice& l) {
    std::size_t n = l.rank();
    const IMat& g = l.gram().entries();
    // x -> (x,x) mod 2 is linear over F_2; its kernel is spanned below.
    std::size_t j0 = n;
    for (std::size_t i = 0; i < n; ++i)
        if (g(i, i) % 2 != 0) {
            j0 = i;
            break;
        }
    if (j0 == n) return {l, 1};
    IMat b(n, n);  // columns = sublattice basis in L's coordinates
    for (std::size_t c = 0; c < n; ++c) {
        if (c == j0) {
            b(c, c) = 2;
        } else {
            b(c, c) = 1;
            if (g(c, c) % 2 != 0) b(j0, c) = 1;
        }
    }
    IMat gram = b.transpose() * g * b;
    return {QuadLattice(std::move(gram)), 2};
}

namespace {

// element of the discriminant group as a tuple modulo the invariant factors
using GroupElem = std::vector<Int>;

GroupElem add_mod(const GroupElem& a, const GroupElem& b, const std::vector<Int>& mods) {
    GroupElem c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % mods[i];
    return c;
}

}  // namespace

std::vector<Overlattice> overlattices(const QuadLattice& l,
                                      const std::vector<std::pair<IVec, Int>>& keep_roots) {
    std::size_t n = l.rank();
    SmithForm s = smith_normal_form(l.gram().entries());
    std::vector<Int> mods;
    std::vector<std::size_t> pos;  // which SNF slots are non-trivial
    for (std::size_t i = 0; i < n; ++i)
        if (s.d(i, i) > 1) {
            mods.push_back(s.d(i, i));
            pos.push_back(i);
        }

    // coset representative in L* for a group element: r(c) = G^{-1} U^{-1} c
    QMat ginv = inverse(to_rational(l.gram().entries()));
    QMat uinv = inverse(to_rational(s.u));
    auto rep = [&](const GroupElem& c) {
        QVec full(n, Rat(0));
        for (std::size_t i = 0; i < mods.size(); ++i) full[pos[i]] = Rat(c[i]);
        return ginv * (uinv * full);
    };

    // enumerate the whole group
    std::vector<GroupElem> elems;
    {
        GroupElem cur(mods.size(), Int(0));
        for (;;) {
            elems.push_back(cur);
            std::size_t i = 0;
            while (i < mods.size()) {
                if (++cur[i] < mods[i]) break;
                cur[i] = 0;
                ++i;
            }
            if (i == mods.size()) break;
            if (mods.empty()) break;
        }
    }
    std::map<GroupElem, QVec> reps;
    for (const auto& e : elems) reps[e] = rep(e);

    const QMat gq = to_rational(l.gram().entries());
    auto pair_val = [&](const QVec& x, const QVec& y) { return inner(gq, x, y); };

    // all subgroups by closure-extension search
    std::set<std::vector<GroupElem>> subgroups;
    std::vector<std::vector<GroupElem>> work;
    std::vector<GroupElem> trivial{GroupElem(mods.size(), Int(0))};
    subgroups.insert(trivial);
    work.push_back(trivial);
    while (!work.empty()) {
        auto sg = work.back();
        work.pop_back();
        for (const auto& g : elems) {
            if (std::binary_search(sg.begin(), sg.end(), g)) continue;
            std::set<GroupElem> bigger(sg.begin(), sg.end());
            GroupElem acc = g;
            while (bigger.find(acc) == bigger.end()) {
                for (const auto& x : sg) bigger.insert(add_mod(x, acc, mods));
                acc = add_mod(acc, g, mods);
            }
            std::vector<GroupElem> key(bigger.begin(), bigger.end());
            if (subgroups.insert(key).second) work.push_back(key);
        }
    }

    std::vector<Overlattice> out;
    for (const auto& sg : subgroups) {
        // integrality of the induced bilinear form on L + <sg>
        bool ok = true;
        for (std::size_t i = 0; i < sg.size() && ok; ++i)
            for (std::size_t j = i; j < sg.size() && ok; ++j)
                if (den(pair_val(reps[sg[i]], reps[sg[j]])) != 1) ok = false;
        if (!ok) continue;
        // root norms must still divide twice the pairing against every new vector
        for (const auto& [u, k] : keep_roots) {
            QVec uq = to_rational(u);
            for (const auto& e : sg) {
                Rat t = 2 * pair_val(uq, reps[e]);
                if (den(t) != 1 || num(t) % k != 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (!ok) continue;

        // integer basis of M = L + <coset reps>
        Int scale = 1;
        for (const auto& e : sg)
            for (const auto& x : reps[e]) scale = lcm(scale, den(x));
        IMat gens(n, n + sg.size());
        for (std::size_t i = 0; i < n; ++i) gens(i, i) = scale;
        for (std::size_t j = 0; j < sg.size(); ++j)
            for (std::size_t i = 0; i < n; ++i)
                gens(i, n + j) = Int(reps[sg[j]][i] * scale);
        IMat ibasis = column_lattice_basis(gens);
        QMat basis(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) basis(i, j) = Rat(ibasis(i, j), scale);

        Rat bdet = abs(det(basis));
        Int index(sg.size());
        if (bdet != Rat(1, index)) throw std::logic_error("overlattice index mismatch");

        QMat mg = basis.transpose() * gq * basis;
        IMat mgi(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (den(mg(i, j)) != 1) throw std::logic_error("overlattice Gram not integral");
                mgi(i, j) = num(mg(i, j));
            }
        out.push_back(Overlattice{basis, index, GramMatrix(mgi)});
    }

    std::sort(out.begin(), out.end(), [](const Overlattice& a, const Overlattice& b) {
        if (a.index != b.index) return a.index < b.index;
        return a.gram.entries().a_ < b.gram.entries().a_;
    });
    return out;
}

bool is_root(const QuadLattice& l, const IVec& e, const Int& k) {
    if (!is_primitive(e)) throw NotPrimitive("root candidate must be primitive");
    if (k <= 0 || l.norm(e) != k) return false;
    IVec basis(l.rank(), Int(0));
    for (std::size_t i = 0; i < l.rank(); ++i) {
        basis[i] = 1;
        if ((2 * l.inner(e, basis)) % k != 0) return false;
        basis[i] = 0;
    }
    return true;
}

}  // namespace latref
