#pragma once

#include "latref/matrix.hpp"

namespace latref {

// All integer vectors y with Q(y + center) = value, where Q is the positive
// definite quadratic form given by the rational Gram matrix.  Exact arithmetic
// throughout; the output is sorted lexicographically.
std::vector<IVec> enumerate_shifted(const QMat& gram, const QVec& center, const Rat& value);

}  // namespace latref
