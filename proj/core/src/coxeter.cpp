#include "latref/coxeter.hpp"

#include "latref/quadext.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>

namespace latref {

CoxeterDiagram build_diagram(const QuadLattice& l, const std::vector<IVec>& roots,
                             std::optional<IVec> base_point) {
    std::size_t m = roots.size();
    IMat gram(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            gram(i, j) = l.inner(roots[i], roots[j]);
            gram(j, i) = gram(i, j);
            if (i != j && gram(i, j) > 0)
                throw NotAcuteAngled("roots must be pairwise non-obtuse");
        }
    std::vector<Int> norms;
    for (std::size_t i = 0; i < m; ++i) norms.push_back(gram(i, i));
    return CoxeterDiagram{l, roots, std::move(norms), std::move(gram), l.rank() - 1,
                          std::move(base_point)};
}

namespace {

// 0 = not psd, 1 = psd and degenerate, 2 = positive definite
int definiteness(const IMat& g) {
    std::size_t n = g.rows();
    QMat m = to_rational(g);
    bool degenerate = false;
    for (std::size_t k = 0; k < n; ++k) {
        if (m(k, k) < 0) return 0;
        if (m(k, k) == 0) {
            for (std::size_t j = k + 1; j < n; ++j)
                if (m(k, j) != 0) return 0;  // zero diagonal with off-diagonal: indefinite
            degenerate = true;
            continue;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            Rat f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
            for (std::size_t j = k; j < n; ++j) m(j, i) = m(i, j);
        }
    }
    return degenerate ? 1 : 2;
}

std::vector<std::vector<std::size_t>> components(const IMat& g, const std::vector<std::size_t>& sub) {
    std::vector<std::vector<std::size_t>> comps;
    std::vector<bool> seen(sub.size(), false);
    for (std::size_t s = 0; s < sub.size(); ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            std::size_t c = stack.back();
            stack.pop_back();
            comp.push_back(c);
            for (std::size_t t = 0; t < sub.size(); ++t)
                if (!seen[t] && g(sub[c], sub[t]) != 0) {
                    seen[t] = true;
                    stack.push_back(t);
                }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace

SubdiagramClass classify_subdiagram(const CoxeterDiagram& d, const std::vector<std::size_t>& subset) {
    if (subset.empty()) return {SubdiagramClass::Kind::Elliptic, 0};
    auto comps = components(d.gram, subset);
    bool all_posdef = true, all_degenerate = true;
    for (const auto& comp : comps) {
        std::vector<std::size_t> idx;
        for (auto c : comp) idx.push_back(subset[c]);
        int def = definiteness(d.gram.submatrix(idx, idx));
        if (def == 0) return {SubdiagramClass::Kind::Other, -1};
        (def == 2 ? all_degenerate : all_posdef) = false;
    }
    if (all_posdef) return {SubdiagramClass::Kind::Elliptic, (int)subset.size()};
    if (all_degenerate)
        return {SubdiagramClass::Kind::Parabolic, (int)(subset.size() - comps.size())};
    return {SubdiagramClass::Kind::Other, -1};
}

namespace {

using Ray = std::array<Int, 2>;

Int cross(const Ray& a, const Ray& b) { return a[0] * b[1] - a[1] * b[0]; }

Ray primitive(Ray r) {
    Int g = gcd(abs(r[0]), abs(r[1]));
    if (g > 1) {
        r[0] /= g;
        r[1] /= g;
    }
    return r;
}

struct EdgeAnalysis {
    bool actual = false;
    bool obstruction = false;                    // an end at infinity that is not a cusp
    std::vector<std::vector<std::size_t>> cusps; // active sets of genuine ideal ends
};

// Search for a timelike point weakly inside all half-spaces (used when the
// caller did not supply one).
IVec find_base_point(const CoxeterDiagram& d) {
    std::size_t n = d.lattice.rank();
    for (long r = 1; r <= 8; ++r) {
        std::vector<long> c(n, -r);
        for (;;) {
            IVec x(n);
            for (std::size_t i = 0; i < n; ++i) x[i] = c[i];
            if (d.lattice.norm(x) < 0) {
                bool ok = true;
                for (const auto& a : d.roots)
                    if (d.lattice.inner(a, x) > 0) {
                        ok = false;
                        break;
                    }
                if (ok) return x;
            }
            std::size_t i = 0;
            while (i < n && ++c[i] > r) c[i++] = -r;
            if (i == n) break;
        }
    }
    throw std::runtime_error("no timelike point inside the chamber within search radius");
}

EdgeAnalysis analyze_edge(const CoxeterDiagram& d, const std::vector<std::size_t>& S,
                          const IVec& base) {
    std::size_t rank = d.lattice.rank();
    const IMat& G = d.lattice.gram().entries();
    EdgeAnalysis out;

    // 2-dimensional orthogonal complement W of span(S) inside the lattice
    IMat rows(S.size(), rank);
    for (std::size_t i = 0; i < S.size(); ++i) {
        for (std::size_t j = 0; j < rank; ++j) {
            Int s = 0;
            for (std::size_t k = 0; k < rank; ++k) s += d.roots[S[i]][k] * G(k, j);
            rows(i, j) = s;
        }
    }
    IMat W = integer_kernel(rows);
    if (W.cols() != 2) return out;  // dependent set; cannot carry an edge

    IVec w1(rank), w2(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        w1[i] = W(i, 0);
        w2[i] = W(i, 1);
    }
    Int B11 = d.lattice.inner(w1, w1), B12 = d.lattice.inner(w1, w2), B22 = d.lattice.inner(w2, w2);
    Int D = B12 * B12 - B11 * B22;
    if (D <= 0) return out;  // W not of signature (1,1): no line of L^n here

    // linear constraints on W-coordinates: one per root not containing the edge,
    // plus the sheet-selecting constraint from the interior point
    std::vector<Ray> cons;
    std::set<std::size_t> in_S(S.begin(), S.end());
    std::vector<std::size_t> cons_root;  // index of the root behind each constraint
    auto pair_with_W = [&](const IVec& v) {
        return Ray{d.lattice.inner(v, w1), d.lattice.inner(v, w2)};
    };
    for (std::size_t j = 0; j < d.roots.size(); ++j) {
        if (in_S.count(j)) continue;
        Ray c = pair_with_W(d.roots[j]);
        if (c[0] == 0 && c[1] == 0) continue;  // mirror contains the whole plane section
        cons.push_back(c);
        cons_root.push_back(j);
    }
    cons.push_back(pair_with_W(base));  // nonzero: base is timelike, span(S) is definite

    // cone C = {x : c . x <= 0 for all constraints}; candidate generators are
    // the constraint boundary directions and inward normals
    std::set<Ray> cand_set;
    for (const auto& c : cons) {
        cand_set.insert(primitive(Ray{-c[1], c[0]}));
        cand_set.insert(primitive(Ray{c[1], -c[0]}));
        cand_set.insert(primitive(Ray{-c[0], -c[1]}));
    }
    std::vector<Ray> feas;
    for (const auto& r : cand_set) {
        bool ok = true;
        for (const auto& c : cons)
            if (c[0] * r[0] + c[1] * r[1] > 0) {
                ok = false;
                break;
            }
        if (ok) feas.push_back(r);
    }

    auto Bq = [&](const Ray& r) { return B11 * r[0] * r[0] + 2 * B12 * r[0] * r[1] + B22 * r[1] * r[1]; };
    auto Bb = [&](const Ray& r, const Ray& s) {
        return B11 * r[0] * s[0] + B12 * (r[0] * s[1] + r[1] * s[0]) + B22 * r[1] * s[1];
    };
    // does the open cone spanned by some non-parallel feasible pair meet {B < 0}?
    for (std::size_t i = 0; i < feas.size() && !out.actual; ++i)
        for (std::size_t j = i + 1; j < feas.size() && !out.actual; ++j) {
            if (cross(feas[i], feas[j]) == 0) continue;
            Int br = Bq(feas[i]), bs = Bq(feas[j]), brs = Bb(feas[i], feas[j]);
            if (br < 0 || bs < 0 || (brs < 0 && brs * brs > br * bs)) out.actual = true;
        }
    if (!out.actual) return out;

    // ideal ends: null rays of B lying inside C, written as u_a + u_b * sqrt(D)
    struct NullRay {
        Ray a, b;
    };
    std::vector<NullRay> nulls;
    if (B11 != 0) {
        for (int s : {1, -1}) {
            nulls.push_back({Ray{-B12, B11}, Ray{Int(s), 0}});
            nulls.push_back({Ray{B12, -B11}, Ray{Int(-s), 0}});
        }
    } else {
        nulls.push_back({Ray{1, 0}, Ray{0, 0}});
        nulls.push_back({Ray{-1, 0}, Ray{0, 0}});
        nulls.push_back({Ray{-B22, 2 * B12}, Ray{0, 0}});
        nulls.push_back({Ray{B22, -2 * B12}, Ray{0, 0}});
    }
    Rat Dq{D};
    for (const auto& q : nulls) {
        bool inside = true;
        for (const auto& c : cons) {
            Rat lin_a{c[0] * q.a[0] + c[1] * q.a[1]};
            Rat lin_b{c[0] * q.b[0] + c[1] * q.b[1]};
            if (sign_quad(lin_a, lin_b, Dq) > 0) {
                inside = false;
                break;
            }
        }
        if (!inside) continue;
        // genuine ideal vertex iff the mirrors through the null ray form a
        // parabolic diagram of rank n-1
        std::vector<std::size_t> active(S.begin(), S.end());
        for (std::size_t t = 0; t < cons.size() - 1; ++t) {
            const Ray& c = cons[t];
            Rat lin_a{c[0] * q.a[0] + c[1] * q.a[1]};
            Rat lin_b{c[0] * q.b[0] + c[1] * q.b[1]};
            if (sign_quad(lin_a, lin_b, Dq) == 0) active.push_back(cons_root[t]);
        }
        std::sort(active.begin(), active.end());
        SubdiagramClass cls = classify_subdiagram(d, active);
        if (cls.kind == SubdiagramClass::Kind::Parabolic && cls.rank == (int)d.dimension - 1)
            out.cusps.push_back(std::move(active));
        else
            out.obstruction = true;
    }
    return out;
}

}  // namespace

VolumeVerdict volume_verdict(const CoxeterDiagram& d) {
    for (std::size_t i = 0; i < d.roots.size(); ++i)
        for (std::size_t j = i + 1; j < d.roots.size(); ++j) {
            MirrorRelation r = d.relation(i, j);
            if (r.kind == MirrorRelation::Kind::Intersecting && r.coxeter_order == 0)
                throw NotCoxeter("intersecting mirrors at a non-Coxeter angle");
        }

    std::size_t n = d.dimension;
    if (d.roots.size() + 1 < n) return VolumeVerdict::NotFiniteVolume;
    IVec base = d.base_point ? *d.base_point : find_base_point(d);

    std::vector<bool> in_edge(d.roots.size(), false);
    bool any_edge = false, any_cusp = false;

    // iterate over all (n-1)-subsets
    std::vector<std::size_t> S(n - 1);
    std::function<bool(std::size_t, std::size_t)> walk = [&](std::size_t pos, std::size_t start) -> bool {
        if (pos == n - 1) {
            if (classify_subdiagram(d, S).kind != SubdiagramClass::Kind::Elliptic) return true;
            EdgeAnalysis ea = analyze_edge(d, S, base);
            if (ea.obstruction) return false;
            if (ea.actual) {
                any_edge = true;
                for (auto i : S) in_edge[i] = true;
                if (!ea.cusps.empty()) any_cusp = true;
            }
            return true;
        }
        for (std::size_t i = start; i < d.roots.size(); ++i) {
            S[pos] = i;
            if (!walk(pos + 1, i + 1)) return false;
        }
        return true;
    };
    if (!walk(0, 0)) return VolumeVerdict::NotFiniteVolume;
    if (!any_edge) return VolumeVerdict::NotFiniteVolume;
    for (bool b : in_edge)
        if (!b) return VolumeVerdict::NotFiniteVolume;  // a facet with no edge is unbounded
    return any_cusp ? VolumeVerdict::FiniteVolumeNonCompact : VolumeVerdict::Compact;
}

bool bad_group_finite(const CoxeterDiagram& d) {
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < d.roots.size(); ++i)
        if (d.norms[i] > 2) bad.push_back(i);
    return classify_subdiagram(d, bad).kind == SubdiagramClass::Kind::Elliptic;
}

std::optional<std::pair<std::size_t, std::size_t>> bad_pair_witness(const CoxeterDiagram& d) {
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        if (d.norms[i] <= 2) continue;
        for (std::size_t j = i + 1; j < d.roots.size(); ++j) {
            if (d.norms[j] <= 2) continue;
            if (d.relation(i, j).kind != MirrorRelation::Kind::Intersecting) return std::pair{i, j};
        }
    }
    return std::nullopt;
}

std::string to_dot(const CoxeterDiagram& d) {
    std::ostringstream os;
    os << "graph coxeter {\n  node [shape=circle];\n";
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        os << "  v" << i + 1 << " [label=\"a" << i + 1 << " (" << d.norms[i] << ")\"";
        if (d.norms[i] > 2) os << " style=filled fillcolor=black fontcolor=white";
        os << "];\n";
    }
    for (std::size_t i = 0; i < d.roots.size(); ++i)
        for (std::size_t j = i + 1; j < d.roots.size(); ++j) {
            MirrorRelation r = d.relation(i, j);
            if (r.kind == MirrorRelation::Kind::Intersecting) {
                if (r.coxeter_order <= 2) continue;  // right angles are drawn as non-edges
                os << "  v" << i + 1 << " -- v" << j + 1;
                if (r.coxeter_order == 4) os << " [label=\"4\"]";
                if (r.coxeter_order == 6) os << " [label=\"6\"]";
                os << ";\n";
            } else if (r.kind == MirrorRelation::Kind::Parallel) {
                os << "  v" << i + 1 << " -- v" << j + 1 << " [style=bold];\n";
            } else {
                os << "  v" << i + 1 << " -- v" << j + 1 << " [style=dashed];\n";
            }
        }
    os << "}\n";
    return os.str();
}

}  // namespace latref
