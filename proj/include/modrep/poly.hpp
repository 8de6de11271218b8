// Characteristic polynomials and finite-field eigenvalues.
#pragma once

#include <vector>

#include "modrep/matrix.hpp"

namespace modrep {

// Characteristic polynomial det(xI - m) of a square matrix over a field,
// as coefficients in degree order (constant term first); always monic.
std::vector<Scalar> charpoly(const Matrix& m);

// Evaluate a polynomial given in degree order at x (same ring).
Scalar poly_eval(const std::vector<Scalar>& coeffs, const Scalar& x);

// Eigenvalues (with multiplicity, sorted by element encoding) of a matrix
// over a finite field, computed in the extension field ext. Entries of m must
// lie in the prime field when m's ring differs from ext. Throws
// std::runtime_error if the characteristic polynomial does not split over ext.
std::vector<Scalar> eigenvalues_ff(const Matrix& m, const Ring& ext);

}  // namespace modrep
