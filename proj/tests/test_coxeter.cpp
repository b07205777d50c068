#include "latref/coxeter.hpp"
#include "latref/minkowski.hpp"
#include "latref/vinberg.hpp"

#include "doctest.h"
#include "fixtures.hpp"

#include <random>

using namespace latref;

namespace {

std::mt19937 rng(31337);

IVec random_vector(std::size_t n, int cap) {
    std::uniform_int_distribution<int> d(-cap, cap);
    IVec v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

}  // namespace

TEST_CASE("mirror_relation classification") {
    // cos^2 = 0, 1/4, 1/2, 3/4 with non-positive product: Coxeter angles
    CHECK(mirror_relation(Int(2), Int(2), Int(0)).coxeter_order == 2);
    CHECK(mirror_relation(Int(2), Int(2), Int(-1)).coxeter_order == 3);
    CHECK(mirror_relation(Int(1), Int(2), Int(-1)).coxeter_order == 4);
    CHECK(mirror_relation(Int(2), Int(6), Int(-3)).coxeter_order == 6);
    // positive product: intersecting but not a Coxeter pair for chamber walls
    CHECK(mirror_relation(Int(2), Int(2), Int(1)).coxeter_order == 0);
    CHECK(mirror_relation(Int(2), Int(2), Int(1)).kind == MirrorRelation::Kind::Intersecting);
    // cos^2 = 1: parallel; beyond: divergent
    CHECK(mirror_relation(Int(2), Int(2), Int(-2)).kind == MirrorRelation::Kind::Parallel);
    CHECK(mirror_relation(Int(2), Int(2), Int(-3)).kind == MirrorRelation::Kind::Divergent);
    CHECK(mirror_relation(Int(5), Int(5), Int(-70)).kind == MirrorRelation::Kind::Divergent);
    CHECK_THROWS(mirror_relation(Int(-1), Int(2), Int(0)));
}

TEST_CASE("reflections: involutive, isometric, fixing the mirror") {
    auto lattices = fixtures::all_candidates();
    int cases = 0;
    while (cases < 1000) {
        const QuadLattice& l = lattices[rng() % lattices.size()];
        IVec e = random_vector(4, 3);
        Int k = l.norm(e);
        if (k <= 0 || !is_primitive(e) || !is_root(l, e, k)) continue;
        IVec x = random_vector(4, 10), y = random_vector(4, 10);
        IVec rx = reflect(l, e, x), ry = reflect(l, e, y);
        CHECK(reflect(l, e, rx) == x);                  // involution
        CHECK(l.inner(rx, ry) == l.inner(x, y));        // isometry
        CHECK(l.inner(rx, e) == -l.inner(x, e));        // flips the normal pairing
        CHECK(reflect(l, e, e) == IVec{-e[0], -e[1], -e[2], -e[3]});
        ++cases;
    }
}

TEST_CASE("point_mirror_distance_sq") {
    QuadLattice l = fixtures::l1();
    IVec v0{Int(1), Int(0), Int(0), Int(0)};  // norm -7
    IVec a{Int(0), Int(1), Int(0), Int(0)};   // orthogonal mirror
    CHECK(point_mirror_distance_sq(l, v0, a) == 0);
    IVec b{Int(1), Int(3), Int(0), Int(0)};  // norm 2, pairing (b, v0) = -7
    CHECK(point_mirror_distance_sq(l, v0, b) == Rat(49, 14));
    CHECK_THROWS(point_mirror_distance_sq(l, a, b));  // base point must be timelike
}

TEST_CASE("subdiagram classification on a concrete root set") {
    // roots of the chamber of L1 = diag(-7,1,1,1); the run is known to close up
    QuadLattice l = fixtures::l1();
    VinbergReport rep = run(l, NormPolicy::only({Int(1), Int(2)}));
    REQUIRE(rep.verdict == RunVerdict::Compact);
    const CoxeterDiagram& d = rep.diagram;
    REQUIRE(d.roots.size() >= 4);

    // single vertices are elliptic of rank 1
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        auto c = classify_subdiagram(d, {i});
        CHECK(c.kind == SubdiagramClass::Kind::Elliptic);
        CHECK(c.rank == 1);
    }
    // pairs follow the mirror relation
    for (std::size_t i = 0; i < d.roots.size(); ++i)
        for (std::size_t j = i + 1; j < d.roots.size(); ++j) {
            auto c = classify_subdiagram(d, {i, j});
            auto r = d.relation(i, j);
            if (r.kind == MirrorRelation::Kind::Intersecting) {
                CHECK(c.kind == SubdiagramClass::Kind::Elliptic);
                CHECK(c.rank == 2);
            } else if (r.kind == MirrorRelation::Kind::Parallel) {
                CHECK(c.kind == SubdiagramClass::Kind::Parabolic);
            } else {
                CHECK(c.kind == SubdiagramClass::Kind::Other);
            }
        }
}

TEST_CASE("bad pair detection") {
    // L5 = diag(-55,1,1,1) accumulates two divergent norm-5 mirrors early
    QuadLattice l = fixtures::l5();
    VinbergEngine engine(l, NormPolicy::all(), {8, Rat(1000000)});
    while (engine.next_root()) {
        if (engine.accepted().size() >= 8) break;
    }
    CoxeterDiagram d = engine.diagram();
    auto w = bad_pair_witness(d);
    REQUIRE(w.has_value());
    auto [i, j] = *w;
    CHECK(d.norms[i] > 2);
    CHECK(d.norms[j] > 2);
    CHECK(d.relation(i, j).kind != MirrorRelation::Kind::Intersecting);
    CHECK(!bad_group_finite(d));
}

TEST_CASE("dot output mentions every root") {
    QuadLattice l = fixtures::l1();
    VinbergReport rep = run(l, NormPolicy::only({Int(1), Int(2)}));
    std::string dot = to_dot(rep.diagram);
    CHECK(dot.find("graph") != std::string::npos);
    for (std::size_t i = 0; i < rep.roots.size(); ++i)
        CHECK(dot.find("v" + std::to_string(i + 1)) != std::string::npos);
}
