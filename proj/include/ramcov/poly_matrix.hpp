#pragma once

#include "ramcov/matrix.hpp"
#include "ramcov/polynomial.hpp"

namespace ramcov {

using PolyMatrix = Matrix<Polynomial>;

/// Fraction-free (Bareiss) elimination over Q[t]; every division is exact.
Polynomial determinant(PolyMatrix m);

/// Classical adjugate (transpose of the cofactor matrix) by Laplace expansion,
/// memoizing minors over column subsets. Exponential in the dimension; kept
/// as the independent route for cross-checks.
PolyMatrix adjugate_by_cofactors(const PolyMatrix& m);

/// Laplace expansion with the same memoization.
Polynomial determinant_by_cofactors(const PolyMatrix& m);

}  // namespace ramcov
