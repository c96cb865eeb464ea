#pragma once

#include <vector>

#include "paramdyn/poly.hpp"

namespace paramdyn {

// Resultant of two homogeneous forms of equal degree d in (z, w), with Poly
// coefficients, eliminated with respect to (z, w). Inputs are coefficient
// vectors of length d + 1 indexed by the z-power (entry j multiplies
// z^j w^(d-j)); leading entries may be zero. The result is a Poly in t,
// identically zero iff the forms share a factor over Q(t).
//
// Computed as the 2d x 2d Sylvester determinant with Bareiss fraction-free
// elimination; every interior division is exact.
Poly poly_resultant(const std::vector<Poly>& p, const std::vector<Poly>& q);

}  // namespace paramdyn
