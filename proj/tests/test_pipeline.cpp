#include "latref/pipeline.hpp"
#include "latref/local.hpp"

#include "doctest.h"
#include "fixtures.hpp"

#include <cmath>
#include <set>

using namespace latref;

TEST_CASE("configuration enumeration counts") {
    auto raw = enumerate_configurations();
    CHECK(raw.size() == 353);
    auto dedup = dedupe_configurations(raw);
    CHECK(dedup.size() == 117);
    for (const auto& cfg : dedup) {
        QuadLattice l(cfg.gram);
        CHECK(l.signature() == std::pair<int, int>(3, 1));
        // diagonal entries are the norms 1 and 2 only
        for (std::size_t i = 0; i < 4; ++i) {
            const Int& d = cfg.gram(i, i);
            CHECK((d == 1 || d == 2));
        }
        // the free entry respects the width bound that produced it
        double g34 = cfg.gram(2, 3).convert_to<double>();
        double cap = round_up_hundredths(cfg.t_used) *
                     std::sqrt(Int(cfg.gram(2, 2) * cfg.gram(3, 3)).convert_to<double>());
        CHECK(g34 <= 0);
        CHECK(-g34 < cap);
    }
}

TEST_CASE("anisotropic classes: seven, with the expected invariants") {
    auto classes = anisotropic_classes(dedupe_configurations(enumerate_configurations()));
    REQUIRE(classes.size() == 7);
    std::vector<long> discs;
    std::size_t members = 0;
    for (const auto& c : classes) {
        CHECK(is_anisotropic_over_Q(c.lattice));
        CHECK(!c.isomorphism_unknown);
        discs.push_back(c.lattice.discriminant().convert_to<long>());
        members += c.members;
    }
    CHECK(discs == std::vector<long>{-7, -15, -15, -23, -28, -55, -60});
    CHECK(members == 19);  // anisotropic configurations among the 117
}

TEST_CASE("saturation closes the candidate list") {
    auto classes = anisotropic_classes(dedupe_configurations(enumerate_configurations()));
    auto cands = saturate(classes);
    CHECK(cands.size() == 7);  // every overlattice folds back into the list
    // sorted canonically and pairwise non-isomorphic
    for (std::size_t i = 0; i < cands.size(); ++i)
        for (std::size_t j = i + 1; j < cands.size(); ++j) {
            CHECK(lattice_order(cands[i].lattice, cands[j].lattice));
            CHECK(!std::holds_alternative<IsomYes>(
                z_isomorphic(cands[i].lattice, cands[j].lattice, 25)));
        }
}

TEST_CASE("lattice_order is a strict weak ordering on the candidates") {
    auto ls = fixtures::all_candidates();
    for (const auto& a : ls) CHECK(!lattice_order(a, a));
    for (const auto& a : ls)
        for (const auto& b : ls) {
            if (lattice_order(a, b)) CHECK(!lattice_order(b, a));
            for (const auto& c : ls)
                if (lattice_order(a, b) && lattice_order(b, c)) CHECK(lattice_order(a, c));
        }
}
