#include "latref/edge_bounds.hpp"

#include "latref/quadext.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace latref {

namespace {

constexpr std::array<int, 4> kDenoms{2, 3, 4, 6};

Q236 exact_cos(int m) {
    switch (m) {
        case 2: return Q236(Rat(0));
        case 3: return Q236(Rat(1, 2));
        case 4: return Q236(Rat(0), Rat(1, 2), Rat(0), Rat(0));  // sqrt(2)/2
        case 6: return Q236(Rat(0), Rat(0), Rat(1, 2), Rat(0));  // sqrt(3)/2
    }
    throw std::invalid_argument("dihedral angle must be pi/2, pi/3, pi/4 or pi/6");
}

double angle_of(int m) { return M_PI / m; }

// cofactor C_ij of a 4x4 matrix over Q(sqrt2, sqrt3)
Q236 cofactor(const std::array<std::array<Q236, 4>, 4>& g, int i, int j) {
    std::array<std::array<Q236, 3>, 3> m;
    int r = 0;
    for (int a = 0; a < 4; ++a) {
        if (a == i) continue;
        int c = 0;
        for (int b = 0; b < 4; ++b) {
            if (b == j) continue;
            m[r][c++] = g[a][b];
        }
        ++r;
    }
    Q236 det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return ((i + j) % 2 == 0) ? det : -det;
}

// single-labeling evaluation: F uses the plane angles a3, a4 at the endpoints
EdgeBound evaluate(const AngleSet& s) {
    EdgeBound row;
    row.angles = s;
    row.plane = plane_angles(s);

    double a12 = angle_of(s.m[0]);
    row.a0 = std::tanh(std::log(1.0 / std::tan(a12 / 4.0)));
    row.f = std::asinh(row.a0 / std::tan(row.plane[2] / 2.0)) +
            std::asinh(row.a0 / std::tan(row.plane[3] / 2.0));

    // Gram matrix of the unit outer normals; the (3,4) entry -T is unknown
    std::array<std::array<Q236, 4>, 4> g{};
    for (int i = 0; i < 4; ++i) g[i][i] = Q236(Rat(1));
    auto put = [&](int i, int j, int m) { g[i][j] = g[j][i] = -exact_cos(m); };
    put(0, 1, s.m[0]);
    put(0, 2, s.m[1]);
    put(1, 2, s.m[2]);
    put(0, 3, s.m[3]);
    put(1, 3, s.m[4]);

    g[2][3] = g[3][2] = Q236(Rat(0));
    Q236 g33 = cofactor(g, 2, 2);
    Q236 g44 = cofactor(g, 3, 3);
    Q236 c0 = cofactor(g, 2, 3);
    g[2][3] = g[3][2] = Q236(Rat(-1));  // T = 1
    Q236 c1 = cofactor(g, 2, 3) - c0;

    row.g33 = g33.to_double();
    row.g44 = g44.to_double();
    row.c0 = c0.to_double();
    row.c1 = c1.to_double();
    if (row.c1 <= 1e-12 || row.g33 * row.g44 <= 1e-12) throw IllposedAngleSet("degenerate cofactors");
    row.t = (std::cosh(row.f) * std::sqrt(row.g33 * row.g44) - row.c0) / row.c1;
    return row;
}

// face swap (F1 <-> F2) and endpoint swap (F3 <-> F4) act on the angle labels
std::vector<AngleSet> orbit_of(const AngleSet& s) {
    std::vector<AngleSet> out;
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
            AngleSet t{{a12, a13, a23, a14, a24}};
            if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
        }
    return out;
}

bool triangle_sums_ok(const AngleSet& s) {
    // both triples of dihedral angles around an endpoint must sum past pi;
    // with angles pi/m this is 1/m12 + 1/m13 + 1/m23 > 1, checked over a
    // common denominator of 12
    auto sum12 = [](int a, int b, int c) { return 12 / a + 12 / b + 12 / c; };
    return sum12(s.m[0], s.m[1], s.m[2]) > 12 && sum12(s.m[0], s.m[3], s.m[4]) > 12;
}

std::optional<EdgeBound> best_row(const AngleSet& s) {
    std::optional<EdgeBound> best;
    for (const auto& member : orbit_of(s)) {
        EdgeBound row;
        try {
            row = evaluate(member);
        } catch (const IllposedAngleSet&) {
            continue;
        } catch (const DegenerateVertex&) {
            continue;
        }
        if (!best || row.t < best->t) best = row;
    }
    if (best) best->angles = s;  // report under the canonical labeling
    return best;
}

}  // namespace

std::array<double, 4> plane_angles(const AngleSet& s) {
    double a12 = angle_of(s.m[0]);
    double a13 = angle_of(s.m[1]);
    double a23 = angle_of(s.m[2]);
    double a14 = angle_of(s.m[3]);
    double a24 = angle_of(s.m[4]);
    auto plane = [&](double ab, double ac) {
        double c = (std::cos(ab) + std::cos(a12) * std::cos(ac)) / (std::sin(a12) * std::sin(ac));
        if (std::abs(c) >= 1.0) throw DegenerateVertex("no spherical triangle with these angles");
        return std::acos(c);
    };
    return {plane(a23, a13), plane(a24, a14), plane(a13, a23), plane(a14, a24)};
}

double edge_length_bound(const AngleSet& s) {
    auto p = plane_angles(s);
    double a12 = angle_of(s.m[0]);
    double a0 = std::tanh(std::log(1.0 / std::tan(a12 / 4.0)));
    auto f = [&](double x, double y) {
        return std::asinh(a0 / std::tan(x / 2.0)) + std::asinh(a0 / std::tan(y / 2.0));
    };
    // the derivation relabels the endpoints so that one of the two incenters is
    // the closer one; taking the larger of the two evaluations is always sound
    return std::max(f(p[2], p[3]), f(p[0], p[1]));
}

double width_bound(const AngleSet& s) {
    auto row = best_row(s);
    if (!row) throw IllposedAngleSet("no labeling yields a usable inequality");
    return row->t;
}

std::vector<AngleSet> valid_angle_sets() {
    std::vector<AngleSet> out;
    std::array<int, 5> m{};
    auto rec = [&](auto&& self, int k) -> void {
        if (k == 5) {
            AngleSet s{m};
            if (!triangle_sums_ok(s)) return;
            for (const auto& member : orbit_of(s))
                if (member < s) return;  // not the canonical representative
            auto row = best_row(s);
            if (!row || row->t <= 0) return;  // no compact edge can realize this set
            out.push_back(s);
            return;
        }
        for (int d : kDenoms) {
            m[k] = d;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EdgeBound> bounds_table() {
    std::vector<EdgeBound> table;
    for (const auto& s : valid_angle_sets()) {
        auto row = best_row(s);
        if (row) {
            table.push_back(*row);
        } else {
            EdgeBound bad;
            bad.angles = s;
            bad.illposed = true;
            table.push_back(bad);
        }
    }
    return table;
}

double round_up_hundredths(double x) { return std::ceil(x * 100.0) / 100.0; }

}  // namespace latref
