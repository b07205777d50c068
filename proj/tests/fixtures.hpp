#pragma once

#include "latref/lattice.hpp"

// The seven candidate lattices of the rank-4 classification, in the bases
// used throughout the tests.  L1..L5 are diagonal; L6 and L7 are the even
// lattices given by explicit Gram matrices.
namespace fixtures {

using latref::IMat;
using latref::Int;
using latref::QuadLattice;

inline QuadLattice diag(long a, long b, long c, long d) {
    IMat g(4, 4);
    g(0, 0) = a; g(1, 1) = b; g(2, 2) = c; g(3, 3) = d;
    return QuadLattice(g);
}

inline QuadLattice l1() { return diag(-7, 1, 1, 1); }
inline QuadLattice l2() { return diag(-15, 1, 1, 1); }
inline QuadLattice l3() { return diag(-3, 5, 1, 1); }
inline QuadLattice l4() { return diag(-23, 1, 1, 1); }
inline QuadLattice l5() { return diag(-55, 1, 1, 1); }

inline QuadLattice l6() {
    return QuadLattice(IMat{{Int(2), Int(0), Int(0), Int(-1)},
                            {Int(0), Int(2), Int(0), Int(-1)},
                            {Int(0), Int(0), Int(2), Int(-3)},
                            {Int(-1), Int(-1), Int(-3), Int(2)}});
}

inline QuadLattice l7() {
    return QuadLattice(IMat{{Int(2), Int(0), Int(-1), Int(-1)},
                            {Int(0), Int(2), Int(-1), Int(-1)},
                            {Int(-1), Int(-1), Int(2), Int(-3)},
                            {Int(-1), Int(-1), Int(-3), Int(2)}});
}

inline std::vector<QuadLattice> all_candidates() {
    return {l1(), l2(), l3(), l4(), l5(), l6(), l7()};
}

// basis vectors of l with their norms, the roots the basis itself provides
inline std::vector<std::pair<latref::IVec, Int>> basis_roots(const QuadLattice& l) {
    std::vector<std::pair<latref::IVec, Int>> out;
    for (std::size_t i = 0; i < l.rank(); ++i) {
        latref::IVec e(l.rank(), Int(0));
        e[i] = 1;
        out.emplace_back(e, l.gram()(i, i));
    }
    return out;
}

}  // namespace fixtures
