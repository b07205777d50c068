#pragma once

#include "latref/matrix.hpp"
#include "latref/snf.hpp"

#include <optional>
#include <utility>

namespace latref {

// Symmetric non-degenerate integer Gram matrix.
class GramMatrix {
  public:
    explicit GramMatrix(IMat entries);

    std::size_t rank() const { return m_.rows(); }
    const IMat& entries() const { return m_; }
    const Int& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    bool operator==(const GramMatrix& o) const { return m_ == o.m_; }

  private:
    IMat m_;
};

std::vector<Int> invariant_factors(const GramMatrix& g);
std::pair<int, int> signature(const GramMatrix& g);

// Integral quadratic lattice in a fixed basis; invariants cached at construction.
class QuadLattice {
  public:
    explicit QuadLattice(GramMatrix gram);
    explicit QuadLattice(IMat gram) : QuadLattice(GramMatrix(std::move(gram))) {}

    std::size_t rank() const { return gram_.rank(); }
    const GramMatrix& gram() const { return gram_; }
    const Int& discriminant() const { return disc_; }
    std::pair<int, int> signature() const { return sig_; }
    const std::vector<Int>& invariant_factors() const { return factors_; }

    bool is_hyperbolic() const { return sig_.first == (int)rank() - 1 && sig_.second == 1; }
    bool is_even() const;

    Int inner(const IVec& x, const IVec& y) const { return latref::inner(gram_.entries(), x, y); }
    Int norm(const IVec& x) const { return inner(x, x); }

  private:
    GramMatrix gram_;
    Int disc_;
    std::pair<int, int> sig_;
    std::vector<Int> factors_;
};

// Finite-index extension M of a base lattice L, with basis expressed in L's basis.
struct Overlattice {
    QMat basis_change;  // columns = basis of M in the coordinates of L
    Int index;          // [M : L]
    GramMatrix gram;    // Gram matrix of M in its own basis (integral)
};

// Dual basis data; the dual is not an integral lattice in general.
struct DualBasis {
    QMat basis_change;  // = gram^{-1}; columns span L* in L's coordinates
    Int index;          // [L* : L] = |d(L)|
};

Int discriminant(const QuadLattice& l);
DualBasis dual_lattice(const QuadLattice& l);

// Even part: (L, 1) when L is already even, else the index-2 kernel of x -> (x,x) mod 2.
std::pair<QuadLattice, int> even_sublattice(const QuadLattice& l);

// All integral overlattices L <= M <= L*, each preserving the crystallographic
// condition of the supplied roots: 2(u, x) in (u,u)Z for all x in M.
std::vector<Overlattice> overlattices(const QuadLattice& l,
                                      const std::vector<std::pair<IVec, Int>>& keep_roots);

bool is_root(const QuadLattice& l, const IVec& e, const Int& k);

}  // namespace latref
