#pragma once

#include "latref/lattice.hpp"

namespace latref {

// Mutual position of two mirrors, classified exactly from c^2 = (e,f)^2 / ((e,e)(f,f)).
struct MirrorRelation {
    enum class Kind { Intersecting, Parallel, Divergent } kind;
    Rat cos_sq;
    int sign_of_product;   // sign of (e,f)
    int coxeter_order;     // m for angle pi/m when c^2 in {0, 1/4, 1/2, 3/4} and (e,f) <= 0; else 0
};

inline MirrorRelation mirror_relation(const Int& gram_ee, const Int& gram_ff, const Int& gram_ef) {
    if (gram_ee <= 0 || gram_ff <= 0)
        throw NotSpacelike("mirror normals must have positive norm");
    MirrorRelation r;
    r.cos_sq = Rat(gram_ef * gram_ef, gram_ee * gram_ff);
    r.sign_of_product = sign(gram_ef);
    r.coxeter_order = 0;
    if (r.cos_sq < 1) {
        r.kind = MirrorRelation::Kind::Intersecting;
        if (gram_ef <= 0) {
            if (r.cos_sq == 0) r.coxeter_order = 2;
            else if (r.cos_sq == Rat(1, 4)) r.coxeter_order = 3;
            else if (r.cos_sq == Rat(1, 2)) r.coxeter_order = 4;
            else if (r.cos_sq == Rat(3, 4)) r.coxeter_order = 6;
        }
    } else if (r.cos_sq == 1) {
        r.kind = MirrorRelation::Kind::Parallel;
    } else {
        r.kind = MirrorRelation::Kind::Divergent;  // cos_sq = cosh^2 of the distance
    }
    return r;
}

// x  ->  x - (2(e,x)/(e,e)) e ; lattice-preserving when e is a root
inline IVec reflect(const QuadLattice& l, const IVec& e, const IVec& x) {
    Int k = l.norm(e);
    if (k <= 0) throw NotSpacelike("reflection axis must have positive norm");
    Int t = 2 * l.inner(e, x);
    if (t % k != 0) throw std::domain_error("reflection does not preserve the lattice");
    Int c = t / k;
    IVec y = x;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= c * e[i];
    return y;
}

// sinh^2 of the distance from a timelike point to a mirror: (a,v0)^2 / ((a,a) * -(v0,v0)).
// This is the exact priority key of the Vinberg engine.
inline Rat point_mirror_distance_sq(const QuadLattice& l, const IVec& v0, const IVec& a) {
    Int nv = l.norm(v0);
    Int na = l.norm(a);
    if (nv >= 0) throw std::invalid_argument("base point must be timelike");
    if (na <= 0) throw std::invalid_argument("mirror normal must be spacelike");
    Int ip = l.inner(a, v0);
    return Rat(ip * ip, na * -nv);
}

}  // namespace latref
