#pragma once

#include "latref/numeric.hpp"

#include <array>
#include <vector>

namespace latref {

// Dihedral angles around an edge, each pi/m with m in {2, 3, 4, 6}, stored as
// denominators in the order (a12, a13, a23, a14, a24).
struct AngleSet {
    std::array<int, 5> m;

    bool operator==(const AngleSet&) const = default;
    auto operator<=>(const AngleSet&) const = default;
};

// One row of the width-bound table, with the intermediates kept for inspection.
struct EdgeBound {
    AngleSet angles;
    double t = 0;                      // width bound
    double a0 = 0;                     // tanh(ln cot(a12/4))
    std::array<double, 4> plane{};     // plane angles at the endpoints
    double f = 0;                      // edge length bound entering this row
    double g33 = 0, g44 = 0;           // T-free cofactors of the normal Gram matrix
    double c0 = 0, c1 = 0;             // the cofactor opposite the unknown is c1*T + c0
    bool illposed = false;             // no labeling produced a usable inequality
};

// Plane angles (a1, a2, a3, a4) from the dihedral angles via the dual
// spherical cosine theorem.
std::array<double, 4> plane_angles(const AngleSet& angles);

// Upper bound for the length of the outermost edge.  The two endpoint
// labelings give different values; the maximum is a valid bound either way.
double edge_length_bound(const AngleSet& angles);

// Bound t such that |(u3, u4)| < t * sqrt((u3,u3)(u4,u4)) for the normals of
// the two faces framing the edge.  The face/endpoint relabelings of the same
// geometric edge each yield a valid bound, so the minimum over the orbit is
// taken.
double width_bound(const AngleSet& angles);

// All angle sets compatible with a compact edge: entries in {pi/2, pi/3,
// pi/4, pi/6}, both triangle sums exceed pi, the width bound is positive,
// deduplicated under face and endpoint swaps (canonical representative =
// lexicographically smallest orbit member by denominator).
std::vector<AngleSet> valid_angle_sets();

// The width-bound table, one row per valid angle set, sorted like
// valid_angle_sets().
std::vector<EdgeBound> bounds_table();

// Display rounding: bounds are always rounded UP so they stay upper bounds.
double round_up_hundredths(double x);

}  // namespace latref
