#pragma once

#include "latref/lattice.hpp"
#include "latref/minkowski.hpp"

#include <optional>
#include <string>

namespace latref {

// Weighted graph over a set of roots of a hyperbolic lattice; the polyhedron
// cut out by the half-spaces (x, e_i) <= 0 lives in L^n with n = rank - 1.
struct CoxeterDiagram {
    QuadLattice lattice;
    std::vector<IVec> roots;
    std::vector<Int> norms;
    IMat gram;                      // Gram matrix of the roots
    std::size_t dimension;          // n
    std::optional<IVec> base_point; // timelike point inside the chamber, when known

    MirrorRelation relation(std::size_t i, std::size_t j) const {
        return mirror_relation(gram(i, i), gram(j, j), gram(i, j));
    }
};

CoxeterDiagram build_diagram(const QuadLattice& l, const std::vector<IVec>& roots,
                             std::optional<IVec> base_point = std::nullopt);

struct SubdiagramClass {
    enum class Kind { Elliptic, Parabolic, Other } kind;
    int rank;  // elliptic: #vertices; parabolic: #vertices - #components; other: -1
};

SubdiagramClass classify_subdiagram(const CoxeterDiagram& d, const std::vector<std::size_t>& subset);

enum class VolumeVerdict { Compact, FiniteVolumeNonCompact, NotFiniteVolume };

// Finite-volume criterion, decided geometrically: every elliptic rank-(n-1)
// subdiagram cutting out an actual edge must close up at both ends, each end
// being an ordinary vertex or a genuine cusp.
VolumeVerdict volume_verdict(const CoxeterDiagram& d);

// The subgroup generated by reflections in roots of norm > 2 is finite
// iff those roots span an elliptic subdiagram.
bool bad_group_finite(const CoxeterDiagram& d);

// A pair of roots of norm > 2 whose mirrors are parallel or divergent, if any.
std::optional<std::pair<std::size_t, std::size_t>> bad_pair_witness(const CoxeterDiagram& d);

std::string to_dot(const CoxeterDiagram& d);

}  // namespace latref
