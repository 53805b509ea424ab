#pragma once

#include <vector>

#include "periodkit/bipoly.hpp"
#include "periodkit/unipoly.hpp"

namespace periodkit {

/// Square matrix over Q[first]; row-major.
using PolyMatrix = std::vector<std::vector<UniPoly>>;

/// Fraction-free (Bareiss) determinant over Q[x]. Every division is exact.
UniPoly bareiss_det(PolyMatrix m);

/// Sylvester matrix of P, Q with respect to the second variable. Rows of P
/// come first, each shifted one column right of the previous one.
PolyMatrix sylvester_matrix(const BiPoly& p, const BiPoly& q);

/// Res_second(P, Q) as a polynomial in the first variable. Throws
/// PreconditionError when either input has degree 0 in the second variable.
UniPoly resultant_in_second_var(const BiPoly& p, const BiPoly& q);

/// Univariate resultant via the same Sylvester convention.
Rational resultant(const UniPoly& p, const UniPoly& q);

}  // namespace periodkit
