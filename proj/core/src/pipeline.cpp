#include "latref/pipeline.hpp"

#include "latref/local.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace latref {

namespace {

// pi/m with cos^2 = g^2 / (ni * nj), or nothing if that is no Coxeter cosine
std::optional<int> angle_denom(const Int& g, const Int& ni, const Int& nj) {
    if (g == 0) return 2;
    Rat c2(g * g, ni * nj);
    if (c2 == Rat(1, 4)) return 3;
    if (c2 == Rat(1, 2)) return 4;
    if (c2 == Rat(3, 4)) return 6;
    return std::nullopt;
}

AngleSet canonical_angles(const AngleSet& s) {
    AngleSet best = s;
    for (int faces : {0, 1})
        for (int ends : {0, 1}) {
            auto [a12, a13, a23, a14, a24] = s.m;
            if (faces) {
                std::swap(a13, a23);
                std::swap(a14, a24);
            }
            if (ends) {
                std::swap(a13, a14);
                std::swap(a23, a24);
            }
            best = std::min(best, AngleSet{{a12, a13, a23, a14, a24}});
        }
    return best;
}

// width bound per canonical angle set; sets with no usable bound map to 0
double cached_width(const AngleSet& s, std::map<AngleSet, double>& cache) {
    AngleSet c = canonical_angles(s);
    auto it = cache.find(c);
    if (it != cache.end()) return it->second;
    double t = 0;
    try {
        t = width_bound(c);
    } catch (const IllposedAngleSet&) {
        t = 0;
    }
    cache.emplace(c, t);
    return t;
}

bool positive_definite_on(const IMat& g, std::array<std::size_t, 3> idx) {
    IMat s = g.submatrix({idx[0], idx[1], idx[2]}, {idx[0], idx[1], idx[2]});
    if (s(0, 0) <= 0) return false;
    if (s(0, 0) * s(1, 1) - s(0, 1) * s(0, 1) <= 0) return false;
    return det(s) > 0;
}

std::vector<Int> gram_key(const IMat& g) {
    std::vector<Int> key;
    key.reserve(g.rows() * g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) key.push_back(g(i, j));
    return key;
}

IMat permuted(const IMat& g, const std::array<std::size_t, 4>& p) {
    IMat out(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) out(i, j) = g(p[i], p[j]);
    return out;
}

}  // namespace

bool lattice_order(const QuadLattice& a, const QuadLattice& b) {
    Int da = abs(a.discriminant()), db = abs(b.discriminant());
    if (da != db) return da < db;
    if (a.invariant_factors() != b.invariant_factors())
        return a.invariant_factors() < b.invariant_factors();
    return gram_key(a.gram().entries()) < gram_key(b.gram().entries());
}

std::vector<EdgeConfiguration> enumerate_configurations() {
    std::map<AngleSet, double> widths;
    std::vector<EdgeConfiguration> out;

    std::array<Int, 4> d;
    for (int mask = 0; mask < 16; ++mask) {
        for (int i = 0; i < 4; ++i) d[i] = (mask >> i) & 1 ? 2 : 1;
        // a -1 entry means angle pi/3, pi/4 or pi/6; norms (1,1) would need
        // cosine 1, so those pairs stay orthogonal
        auto opts = [&](int i, int j) {
            return d[i] == 1 && d[j] == 1 ? std::vector<Int>{0} : std::vector<Int>{0, -1};
        };
        for (Int g12 : opts(0, 1))
            for (Int g13 : opts(0, 2))
                for (Int g23 : opts(1, 2))
                    for (Int g14 : opts(0, 3))
                        for (Int g24 : opts(1, 3)) {
                            auto m12 = angle_denom(g12, d[0], d[1]);
                            auto m13 = angle_denom(g13, d[0], d[2]);
                            auto m23 = angle_denom(g23, d[1], d[2]);
                            auto m14 = angle_denom(g14, d[0], d[3]);
                            auto m24 = angle_denom(g24, d[1], d[3]);
                            if (!m12 || !m13 || !m23 || !m14 || !m24) continue;
                            AngleSet angles{{*m12, *m13, *m23, *m14, *m24}};
                            double t = cached_width(angles, widths);
                            if (t <= 0) continue;
                            double bound =
                                round_up_hundredths(t) *
                                std::sqrt(Int(d[2] * d[3]).convert_to<double>());
                            for (Int g34 = 0; -g34.convert_to<double>() < bound; --g34) {
                                IMat g(4, 4);
                                g(0, 0) = d[0]; g(1, 1) = d[1]; g(2, 2) = d[2]; g(3, 3) = d[3];
                                g(0, 1) = g(1, 0) = g12;
                                g(0, 2) = g(2, 0) = g13;
                                g(1, 2) = g(2, 1) = g23;
                                g(0, 3) = g(3, 0) = g14;
                                g(1, 3) = g(3, 1) = g24;
                                g(2, 3) = g(3, 2) = g34;
                                if (det(g) >= 0) continue;  // not signature (3,1)
                                if (!positive_definite_on(g, {0, 1, 2})) continue;
                                if (!positive_definite_on(g, {0, 1, 3})) continue;
                                out.push_back({g, angles, t});
                            }
                        }
    }
    return out;
}

std::vector<EdgeConfiguration> dedupe_configurations(const std::vector<EdgeConfiguration>& configs) {
    static const std::array<std::array<std::size_t, 4>, 4> perms{
        {{0, 1, 2, 3}, {1, 0, 2, 3}, {0, 1, 3, 2}, {1, 0, 3, 2}}};
    std::map<std::vector<Int>, EdgeConfiguration> canon;
    for (const auto& cfg : configs) {
        IMat best = cfg.gram;
        for (const auto& p : perms) best = std::min(best, permuted(cfg.gram, p),
                                                    [](const IMat& a, const IMat& b) {
                                                        return gram_key(a) < gram_key(b);
                                                    });
        EdgeConfiguration rep = cfg;
        rep.gram = best;
        canon.emplace(gram_key(best), rep);
    }
    std::vector<EdgeConfiguration> out;
    out.reserve(canon.size());
    for (auto& [key, cfg] : canon) out.push_back(cfg);
    return out;
}

std::vector<LatticeClass> anisotropic_classes(const std::vector<EdgeConfiguration>& configs) {
    std::vector<LatticeClass> classes;
    for (const auto& cfg : configs) {
        QuadLattice l(cfg.gram);
        if (!is_anisotropic_over_Q(l)) continue;
        bool merged = false, unknown = false;
        for (auto& cls : classes) {
            IsomVerdict v = z_isomorphic(cls.lattice, l);
            if (std::holds_alternative<IsomYes>(v)) {
                ++cls.members;
                merged = true;
                break;
            }
            if (std::holds_alternative<IsomUnknown>(v)) unknown = true;
        }
        if (!merged) classes.push_back({l, 1, unknown});
    }
    std::sort(classes.begin(), classes.end(),
              [](const LatticeClass& a, const LatticeClass& b) {
                  return lattice_order(a.lattice, b.lattice);
              });
    return classes;
}

namespace {

// overlattice bases can come out badly reduced, so retry with a taller box
IsomVerdict compare_escalating(const QuadLattice& a, const QuadLattice& b) {
    IsomVerdict v = z_isomorphic(a, b);
    if (std::holds_alternative<IsomUnknown>(v)) v = z_isomorphic(a, b, 25);
    return v;
}

}  // namespace

std::vector<LatticeClass> saturate(const std::vector<LatticeClass>& classes) {
    std::vector<LatticeClass> out = classes;
    for (const auto& cls : classes) {
        const QuadLattice& l = cls.lattice;
        std::vector<std::pair<IVec, Int>> basis_roots;
        for (std::size_t i = 0; i < l.rank(); ++i) {
            IVec e(l.rank(), Int(0));
            e[i] = 1;
            basis_roots.emplace_back(e, l.gram()(i, i));
        }
        for (const auto& ext : overlattices(l, basis_roots)) {
            if (ext.index == 1) continue;
            QuadLattice m(ext.gram);
            bool merged = false, unknown = false;
            for (auto& cand : out) {
                IsomVerdict v = compare_escalating(cand.lattice, m);
                if (std::holds_alternative<IsomYes>(v)) {
                    merged = true;
                    break;
                }
                if (std::holds_alternative<IsomUnknown>(v)) unknown = true;
            }
            if (!merged) out.push_back({m, 0, unknown});
        }
    }
    std::sort(out.begin(), out.end(), [](const LatticeClass& a, const LatticeClass& b) {
        return lattice_order(a.lattice, b.lattice);
    });
    return out;
}

ClassificationReport classify(const VinbergBudget& budget) {
    ClassificationReport rep;
    auto raw = enumerate_configurations();
    rep.raw_count = raw.size();
    rep.configurations = dedupe_configurations(raw);
    rep.classes = anisotropic_classes(rep.configurations);
    rep.candidates = saturate(rep.classes);
    rep.verdicts.reserve(rep.candidates.size());
    for (const auto& cand : rep.candidates)
        rep.verdicts.push_back(one_two_reflectivity(cand.lattice, budget));
    return rep;
}

}  // namespace latref
