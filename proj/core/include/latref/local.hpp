#pragma once

#include "latref/lattice.hpp"

#include <optional>
#include <variant>

namespace latref {

// A place of Q: a finite prime or the real place.
struct Place {
    bool infinite;
    Int p;  // meaningful only when finite

    static Place real() { return {true, 0}; }
    static Place prime(Int q) { return {false, std::move(q)}; }
};

struct DiagonalForm {
    QVec entries;  // all nonzero
};

// (a, b)_v in {+1, -1}
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

int hasse_invariant(const DiagonalForm& f, const Place& v);

DiagonalForm diagonalize_over_Q(const GramMatrix& g);

// Theorem-style rank-4 local test: anisotropic over Q_p iff the discriminant is
// a local square and the Hasse invariant equals -(-1,-1)_p.
bool is_anisotropic_local_rank4(const DiagonalForm& f, const Place& v);

bool is_anisotropic_over_Q(const QuadLattice& l);
bool is_anisotropic_over_Q(const DiagonalForm& f);

bool rationally_equivalent(const QuadLattice& a, const QuadLattice& b);

struct IsomYes {
    IMat basis_change;  // U with U^T A U = B
};
struct IsomNo {
    std::string witness_invariant;
};
struct IsomUnknown {};
using IsomVerdict = std::variant<IsomYes, IsomNo, IsomUnknown>;

IsomVerdict z_isomorphic(const QuadLattice& a, const QuadLattice& b, const Int& height_budget = 10);

// true iff x is a square in Q_p* (or in R* for the real place)
bool is_local_square(const Rat& x, const Place& v);

}  // namespace latref
