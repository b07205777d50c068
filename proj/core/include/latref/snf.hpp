#pragma once

#include "latref/matrix.hpp"

namespace latref {

// Smith normal form D = U * A * V with U, V unimodular, diagonal entries
// non-negative and each dividing the next.
struct SmithForm {
    IMat d, u, v;
    std::vector<Int> invariant_factors() const;  // nonzero diagonal entries, ascending
};

SmithForm smith_normal_form(const IMat& a);

// Basis of the saturated integer kernel {x in Z^n : A x = 0}, as columns.
IMat integer_kernel(const IMat& a);

// Column Hermite reduction: basis (as columns) of the lattice spanned by the
// columns of the input.  Input columns may be linearly dependent.
IMat column_lattice_basis(const IMat& gens);

}  // namespace latref
