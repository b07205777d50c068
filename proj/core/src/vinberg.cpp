#include "latref/vinberg.hpp"

#include "latref/shortvec.hpp"

#include <algorithm>
#include <set>

namespace latref {

std::vector<Int> NormPolicy::resolve(const QuadLattice& l) const {
    std::vector<Int> ks;
    if (all_divisors) {
        Int bound = 2 * l.invariant_factors().back();
        for (Int k = 1; k <= bound; ++k)
            if (bound % k == 0) ks.push_back(k);
    } else {
        ks = explicit_set;
        std::sort(ks.begin(), ks.end());
        ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
        for (const auto& k : ks)
            if (k <= 0) throw std::invalid_argument("root norms must be positive");
    }
    return ks;
}

IVec choose_basic_point(const QuadLattice& l) {
    std::size_t n = l.rank();
    for (std::size_t i = 0; i < n; ++i)
        if (l.gram()(i, i) < 0) {
            IVec v(n, Int(0));
            v[i] = 1;
            return v;
        }
    // bounded search; prefer vectors whose pairing lattice is coarse and whose
    // norm is large, since both shrink the region a priority budget covers
    for (long r = 12; r <= 24; r += 12) {
        std::optional<IVec> best;
        Int best_score = 0;
        std::vector<long> c(n, -r);
        for (;;) {
            IVec x(n);
            for (std::size_t i = 0; i < n; ++i) x[i] = c[i];
            Int q = l.norm(x);
            if (q < 0 && content(x) == 1) {
                IVec gx(n, Int(0));
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) gx[i] += l.gram()(i, j) * x[j];
                Int score = content(gx) * q * q;
                if (!best || score > best_score || (score == best_score && x < *best)) {
                    best = x;
                    best_score = score;
                }
            }
            std::size_t i = 0;
            while (i < n && ++c[i] > r) c[i++] = -r;
            if (i == n) break;
        }
        if (best) return *best;
    }
    throw std::runtime_error("no timelike vector found; is the lattice hyperbolic?");
}

namespace {

// integer kernel of the single form x -> (x, v0) together with its Gram matrix
struct Perp {
    IMat K;    // columns
    QMat Gk;   // K^T G K, positive definite for timelike v0
    QMat Gkinv;
};

Perp perp_of(const QuadLattice& l, const IVec& v0) {
    std::size_t n = l.rank();
    IMat row(1, n);
    for (std::size_t j = 0; j < n; ++j) {
        Int s = 0;
        for (std::size_t k = 0; k < n; ++k) s += v0[k] * l.gram()(k, j);
        row(0, j) = s;
    }
    IMat K = integer_kernel(row);
    IMat Gk = K.transpose() * l.gram().entries() * K;
    QMat Gkq = to_rational(Gk);
    return {K, Gkq, inverse(Gkq)};
}

IVec from_perp(const IMat& K, const IVec& y, const IVec& offset) {
    IVec z = offset;
    for (std::size_t i = 0; i < K.rows(); ++i)
        for (std::size_t j = 0; j < K.cols(); ++j) z[i] += K(i, j) * y[j];
    return z;
}

}  // namespace

std::vector<IVec> stabilizer_chamber(const QuadLattice& l, const IVec& v0,
                                     const std::vector<Int>& norms) {
    Perp p = perp_of(l, v0);
    std::size_t kn = p.K.cols();
    IVec zero_off(l.rank(), Int(0));
    std::set<IVec> roots;
    for (const auto& k : norms) {
        for (const auto& y : enumerate_shifted(p.Gk, QVec(kn, Rat(0)), Rat(k))) {
            IVec z = from_perp(p.K, y, zero_off);
            if (content(z) != 1) continue;
            if (is_root(l, z, k)) roots.insert(z);
        }
    }
    // positive system via the lexicographic functional, then extract simple roots
    std::vector<IVec> pos;
    for (const auto& r : roots) {
        for (const auto& c : r) {
            if (c > 0) pos.push_back(r);
            if (c != 0) break;
        }
    }
    std::set<IVec> pos_set(pos.begin(), pos.end());
    std::vector<IVec> simple;
    for (const auto& pr : pos) {
        bool decomposable = false;
        for (const auto& q : pos) {
            if (q == pr) continue;
            IVec diff(pr.size());
            for (std::size_t i = 0; i < pr.size(); ++i) diff[i] = pr[i] - q[i];
            if (pos_set.count(diff)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(pr);
    }
    std::sort(simple.begin(), simple.end(), [&](const IVec& a, const IVec& b) {
        Int na = l.norm(a), nb = l.norm(b);
        if (na != nb) return na < nb;
        return a < b;
    });
    return simple;
}

struct VinbergEngine::Impl {
    Perp perp;
    IVec row;          // (b_i, v0)
    Int g;             // gcd of row = generator of the image of (., v0)
    IVec tunit;        // integer vector with (tunit, v0) = g
    std::vector<Int> norms;
    std::set<std::tuple<Rat, Int, Int>> cells;      // (priority, norm k, value m)
    std::set<std::pair<Rat, IVec>> buffer;          // candidate roots by (priority, lex)
    bool cells_capped = false;                      // some cells fell past max_priority
};

VinbergEngine::VinbergEngine(QuadLattice l, NormPolicy policy, VinbergBudget budget)
    : lattice_(std::move(l)), policy_(std::move(policy)), budget_(std::move(budget)) {
    if (!lattice_.is_hyperbolic())
        throw std::invalid_argument("Vinberg's algorithm needs a hyperbolic lattice");
    v0_ = choose_basic_point(lattice_);
    impl_ = std::make_shared<Impl>();
    impl_->perp = perp_of(lattice_, v0_);
    impl_->norms = policy_.resolve(lattice_);

    std::size_t n = lattice_.rank();
    impl_->row.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        IVec basis(n, Int(0));
        basis[j] = 1;
        impl_->row[j] = lattice_.inner(basis, v0_);
    }
    // extended gcd across the row gives a particular solution for each cell
    impl_->g = 0;
    impl_->tunit.assign(n, Int(0));
    for (std::size_t j = 0; j < n; ++j) {
        if (impl_->row[j] == 0) continue;
        if (impl_->g == 0) {
            impl_->g = abs(impl_->row[j]);
            impl_->tunit[j] = sign(impl_->row[j]);
        } else {
            // g*told + row_j * x = gcd(g, row_j)
            Int a = impl_->g, b = impl_->row[j];
            Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
            while (r != 0) {
                Int q = old_r / r;
                std::swap(old_r -= q * r, r);
                std::swap(old_s -= q * s, s);
                std::swap(old_t -= q * t, t);
            }
            if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
            for (auto& c : impl_->tunit) c *= old_s;
            impl_->tunit[j] += old_t;
            impl_->g = old_r;
        }
    }

    for (const auto& k : impl_->norms) {
        Rat prio = Rat(impl_->g * impl_->g, k);
        impl_->cells.insert({prio, k, -impl_->g});
    }

    for (const auto& r : stabilizer_chamber(lattice_, v0_, impl_->norms)) {
        accepted_.push_back(r);
        norms_.push_back(lattice_.norm(r));
        priorities_.push_back(Rat(0));
    }
}

std::optional<IVec> VinbergEngine::next_root() {
    auto& im = *impl_;
    for (;;) {
        // pull cells until every candidate at or below the next emission is buffered
        while (!im.cells.empty()) {
            auto [prio, k, m] = *im.cells.begin();
            if (!im.buffer.empty() && im.buffer.begin()->first < prio) break;
            if (prio > budget_.max_priority) {
                im.cells_capped = true;
                break;
            }
            im.cells.erase(im.cells.begin());
            {
                Int m2 = m - im.g;
                im.cells.insert({Rat(m2 * m2, k), k, m2});
            }
            // coset representative with (t, v0) = m
            IVec t(lattice_.rank());
            Int mult = m / im.g;
            for (std::size_t i = 0; i < t.size(); ++i) t[i] = mult * im.tunit[i];
            // complete the square: center c = Gk^{-1} K^T G t
            std::size_t kn = im.perp.K.cols();
            QVec rhs(kn, Rat(0));
            for (std::size_t j = 0; j < kn; ++j) {
                IVec col(lattice_.rank());
                for (std::size_t i = 0; i < col.size(); ++i) col[i] = im.perp.K(i, j);
                rhs[j] = Rat(lattice_.inner(col, t));
            }
            QVec center = im.perp.Gkinv * rhs;
            Rat c_gk_c = 0;
            for (std::size_t a = 0; a < kn; ++a)
                for (std::size_t b = 0; b < kn; ++b) c_gk_c += center[a] * im.perp.Gk(a, b) * center[b];
            Rat val = Rat(k) - (Rat(lattice_.norm(t)) - c_gk_c);
            for (const auto& y : enumerate_shifted(im.perp.Gk, center, val)) {
                IVec z = from_perp(im.perp.K, y, t);
                if (lattice_.norm(z) != k || lattice_.inner(z, v0_) != m)
                    throw std::logic_error("cell enumeration produced a stray vector");
                if (content(z) != 1) continue;
                if (!is_root(lattice_, z, k)) continue;
                im.buffer.insert({prio, z});
            }
        }
        if (im.buffer.empty()) return std::nullopt;
        auto [prio, z] = *im.buffer.begin();
        im.buffer.erase(im.buffer.begin());
        if (prio > budget_.max_priority) return std::nullopt;
        bool ok = true;
        for (const auto& a : accepted_)
            if (lattice_.inner(z, a) > 0) {
                ok = false;
                break;
            }
        if (!ok) continue;
        accepted_.push_back(z);
        norms_.push_back(lattice_.norm(z));
        priorities_.push_back(prio);
        return z;
    }
}

CoxeterDiagram VinbergEngine::diagram() const {
    return build_diagram(lattice_, accepted_, v0_);
}

VinbergReport run(const QuadLattice& l, const NormPolicy& policy, const VinbergBudget& budget) {
    VinbergEngine eng(l, policy, budget);
    RunVerdict verdict = RunVerdict::BudgetExhausted;
    while (eng.accepted().size() < budget.max_roots) {
        auto z = eng.next_root();
        if (!z) break;
        CoxeterDiagram dia = eng.diagram();
        VolumeVerdict vv = volume_verdict(dia);
        if (vv == VolumeVerdict::Compact) {
            verdict = RunVerdict::Compact;
            break;
        }
        if (vv == VolumeVerdict::FiniteVolumeNonCompact) {
            verdict = RunVerdict::FiniteVolume;
            break;
        }
        if (bad_pair_witness(dia)) break;  // bad group already infinite; no need to finish
    }
    CoxeterDiagram dia = eng.diagram();
    VinbergReport rep{eng.basic_point(),
                      eng.accepted(),
                      eng.accepted_norms(),
                      eng.accepted_priorities(),
                      dia,
                      verdict,
                      bad_group_finite(dia),
                      bad_pair_witness(dia)};
    return rep;
}

ReflectivityResult one_two_reflectivity(const QuadLattice& l, const VinbergBudget& budget) {
    ReflectivityResult res{Reflectivity12::Undecided, std::nullopt, std::nullopt, std::nullopt};
    VinbergReport r12 = run(l, NormPolicy::only({1, 2}), budget);
    res.restricted_run = r12;
    if (r12.verdict != RunVerdict::BudgetExhausted) {
        res.verdict = Reflectivity12::Reflective12;
        return res;
    }
    VinbergReport rall = run(l, NormPolicy::all(), budget);
    res.full_run = rall;
    if (rall.bad_witness) {
        auto [i, j] = *rall.bad_witness;
        res.witness = std::pair{rall.roots[i], rall.roots[j]};
        res.verdict = Reflectivity12::NotReflective12;
        return res;
    }
    if (rall.verdict != RunVerdict::BudgetExhausted) {
        // completed polyhedron: Lemma 4.1 decides via finiteness of the bad group
        res.verdict = rall.bad_finite ? Reflectivity12::Reflective12 : Reflectivity12::NotReflective12;
        return res;
    }
    return res;
}

}  // namespace latref
