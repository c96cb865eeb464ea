#pragma once

#include <string>

#include "paramdyn/point.hpp"
#include "paramdyn/poly.hpp"

namespace paramdyn {

// Polynomial expressions in t with exact rational coefficients:
//   "t^3 + 2t^2 + t + 1", "1 - t", "(t-4)^2", "3/2 t", "t/2".
// '*' is optional, '^' takes a nonnegative integer, '/' divides by a
// rational constant only.
Poly parse_poly_text(const std::string& text);

// Point specs: a constant ("2", "-1/3"), a pair "a(t):b(t)", or "inf" for
// (1 : 0). The result is reduced and normalized.
ProjPointK parse_point_spec(const std::string& text);

}  // namespace paramdyn
