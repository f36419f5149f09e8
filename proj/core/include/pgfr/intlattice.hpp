#pragma once

#include <vector>

#include "pgfr/numbers.hpp"

namespace pgfr {

using IntVector = std::vector<Int>;
using IntMatrix = std::vector<IntVector>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Row Hermite reduction: returns unimodular U with U*A in row-echelon
/// form; echelon is written back to A.
IntMatrix hermite_row_reduce(IntMatrix& a);

/// Basis of { x in Z^rows : x * A = 0 } (the left kernel lattice of A).
/// The result is a basis of the full kernel lattice: every integer left
/// null vector is an integer combination of the returned rows.
IntMatrix integer_left_kernel(IntMatrix a);

/// Integer kernel of a rational matrix interpreted row-wise: basis of
/// { l in Z^rows : sum_i l_i * row_i = 0 }. Columns are scaled to clear
/// denominators (scaling a column does not change the kernel).
IntMatrix integer_row_relation_basis(const RationalMatrix& rows);

/// True when v lies in the integer span of the basis rows (basis must be a
/// lattice basis of a saturated lattice, as produced above: membership is
/// decided by solving over Q and checking integrality).
bool in_integer_span(const IntMatrix& basis, const IntVector& v);

Int dot(const IntVector& a, const IntVector& b);

}  // namespace pgfr
