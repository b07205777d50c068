#include "latref/vinberg.hpp"

#include "doctest.h"
#include "fixtures.hpp"

using namespace latref;

namespace {

// accepted roots under a given budget, pulled straight from the engine
std::vector<IVec> accepted_roots(const QuadLattice& l, const NormPolicy& policy,
                                 const VinbergBudget& budget) {
    VinbergEngine e(l, policy, budget);
    while (e.next_root()) {
    }
    return e.accepted();
}

}  // namespace

TEST_CASE("choose_basic_point returns a primitive timelike vector") {
    for (const auto& l : fixtures::all_candidates()) {
        IVec v0 = choose_basic_point(l);
        CHECK(l.norm(v0) < 0);
        CHECK(is_primitive(v0));
    }
    // also on a form with no negative diagonal entry
    QuadLattice skew(IMat{{Int(1), Int(0), Int(0), Int(0)},
                          {Int(0), Int(2), Int(0), Int(-1)},
                          {Int(0), Int(0), Int(2), Int(-3)},
                          {Int(0), Int(-1), Int(-3), Int(2)}});
    REQUIRE(skew.is_hyperbolic());
    IVec v0 = choose_basic_point(skew);
    CHECK(skew.norm(v0) < 0);
    CHECK(is_primitive(v0));
}

TEST_CASE("stabilizer chamber walls pass through the basic point") {
    for (const auto& l : {fixtures::l1(), fixtures::l3(), fixtures::l6()}) {
        IVec v0 = choose_basic_point(l);
        auto norms = NormPolicy::all().resolve(l);
        auto walls = stabilizer_chamber(l, v0, norms);
        for (std::size_t i = 0; i < walls.size(); ++i) {
            CHECK(l.inner(walls[i], v0) == 0);
            CHECK(l.norm(walls[i]) > 0);
            CHECK(is_root(l, walls[i], l.norm(walls[i])));
            for (std::size_t j = 0; j < i; ++j) CHECK(l.inner(walls[i], walls[j]) <= 0);
        }
    }
}

TEST_CASE("accepted roots: crystallographic, non-obtuse, priority-sorted") {
    for (const auto& l : fixtures::all_candidates()) {
        VinbergEngine e(l, NormPolicy::all(), {24, Rat(100000)});
        while (e.next_root()) {
        }
        const auto& roots = e.accepted();
        const auto& norms = e.accepted_norms();
        const auto& prios = e.accepted_priorities();
        REQUIRE(!roots.empty());
        IVec v0 = e.basic_point();
        for (std::size_t i = 0; i < roots.size(); ++i) {
            CHECK(is_root(l, roots[i], norms[i]));
            CHECK(l.norm(roots[i]) == norms[i]);
            CHECK(l.inner(roots[i], v0) <= 0);
            // priority matches its definition and never decreases
            Int ip = l.inner(roots[i], v0);
            CHECK(prios[i] == Rat(ip * ip, norms[i]));
            if (i > 0) CHECK(prios[i - 1] <= prios[i]);
            for (std::size_t j = 0; j < i; ++j) CHECK(l.inner(roots[i], roots[j]) <= 0);
        }
    }
}

TEST_CASE("norm policy restricts accepted norms") {
    QuadLattice l = fixtures::l3();
    VinbergEngine e(l, NormPolicy::only({Int(1), Int(2)}), {16, Rat(100000)});
    while (e.next_root()) {
    }
    for (const auto& k : e.accepted_norms()) CHECK((k == 1 || k == 2));
    // the divisor bound for L3: norms divide 2 * 15
    for (const auto& k : NormPolicy::all().resolve(l)) CHECK((2 * 15) % k == 0);
}

TEST_CASE("accepted prefix is stable under budget doubling") {
    for (const auto& l : {fixtures::l1(), fixtures::l3(), fixtures::l5()}) {
        auto small = accepted_roots(l, NormPolicy::all(), {10, Rat(10000)});
        auto large = accepted_roots(l, NormPolicy::all(), {20, Rat(20000)});
        REQUIRE(large.size() >= small.size());
        for (std::size_t i = 0; i < small.size(); ++i) CHECK(small[i] == large[i]);
    }
}

TEST_CASE("runs on the easy candidates terminate compact") {
    for (const auto& l : {fixtures::l1(), fixtures::l2()}) {
        VinbergReport rep = run(l, NormPolicy::only({Int(1), Int(2)}));
        CHECK(rep.verdict == RunVerdict::Compact);
        CHECK(rep.bad_finite);
        CHECK(!rep.bad_witness.has_value());
    }
}

TEST_CASE("reflectivity verdicts of the candidates") {
    CHECK(one_two_reflectivity(fixtures::l1()).verdict == Reflectivity12::Reflective12);
    CHECK(one_two_reflectivity(fixtures::l2()).verdict == Reflectivity12::Reflective12);
    CHECK(one_two_reflectivity(fixtures::l6()).verdict == Reflectivity12::Reflective12);
    CHECK(one_two_reflectivity(fixtures::l7()).verdict == Reflectivity12::Reflective12);
    auto r3 = one_two_reflectivity(fixtures::l3());
    CHECK(r3.verdict == Reflectivity12::NotReflective12);
    auto r5 = one_two_reflectivity(fixtures::l5());
    CHECK(r5.verdict == Reflectivity12::NotReflective12);
    REQUIRE(r5.witness.has_value());
    auto [a, b] = *r5.witness;
    QuadLattice l5 = fixtures::l5();
    CHECK(l5.norm(a) > 2);
    CHECK(l5.norm(b) > 2);
}
