#pragma once

#include "latref/edge_bounds.hpp"
#include "latref/vinberg.hpp"

namespace latref {

// Candidate Gram matrix of the four normals (u1, u2, u3, u4) around the
// outermost edge, together with the bound that capped the (3,4) entry.
struct EdgeConfiguration {
    IMat gram;        // 4x4, signature (3,1)
    AngleSet angles;  // read off the five fixed pairs
    double t_used;    // width bound applied to |g34|
};

// Exhaustive enumeration over diagonals in {1,2}^4 and admissible
// off-diagonal entries, capped by the width-bound table.
std::vector<EdgeConfiguration> enumerate_configurations();

// One representative per orbit of the (u1<->u2), (u3<->u4) relabelings.
std::vector<EdgeConfiguration> dedupe_configurations(const std::vector<EdgeConfiguration>& configs);

struct LatticeClass {
    QuadLattice lattice;                // representative
    std::size_t members = 0;            // configurations merged into this class
    bool isomorphism_unknown = false;   // some comparison came back undecided
};

// Anisotropic configurations grouped by integral isomorphism.
std::vector<LatticeClass> anisotropic_classes(const std::vector<EdgeConfiguration>& configs);

// Closure under finite-index overlattices that keep the basis vectors roots.
std::vector<LatticeClass> saturate(const std::vector<LatticeClass>& classes);

struct ClassificationReport {
    std::size_t raw_count = 0;
    std::vector<EdgeConfiguration> configurations;  // after dedupe
    std::vector<LatticeClass> classes;              // anisotropic isomorphism classes
    std::vector<LatticeClass> candidates;           // after saturation
    std::vector<ReflectivityResult> verdicts;       // parallel to candidates
};

ClassificationReport classify(const VinbergBudget& budget = {});

// canonical presentation order: |discriminant|, invariant factors, Gram entries
bool lattice_order(const QuadLattice& a, const QuadLattice& b);

}  // namespace latref
