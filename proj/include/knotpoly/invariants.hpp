#pragma once

#include "knotpoly/laurent.hpp"

namespace knotpoly {

/// Conway polynomial: the HOMFLY value at v = 1, as a polynomial in x = z.
LaurentPoly1 conway(const LaurentPoly2& homfly);

/// Delta(-1) with sign, computed as nabla(2i). Throws std::domain_error if
/// the value is not a rational integer.
Integer determinant_signed(const LaurentPoly1& nabla);

/// Morton-Williams-Franks lower bound for the braid index: v-span/2 + 1.
/// Throws std::domain_error on the zero polynomial.
int mfw_bound(const LaurentPoly2& homfly);

}  // namespace knotpoly
