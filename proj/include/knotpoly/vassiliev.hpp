#pragma once

#include "knotpoly/gaussian.hpp"
#include "knotpoly/laurent.hpp"

namespace knotpoly {

enum class PolyKind { homfly, kauffman };

/// Mirror image of a HOMFLY value: c v^a z^b -> c (-1)^a v^-a z^b.
LaurentPoly2 conj_homfly(const LaurentPoly2& p);
/// Mirror image of a Kauffman value: a -> a^-1.
LaurentPoly2 conj_kauffman(const LaurentPoly2& p);
LaurentPoly2 conjugate(const LaurentPoly2& p, PolyKind kind);
bool is_self_conjugate(const LaurentPoly2& p, PolyKind kind);

/// a-th v-derivative of the z^b row, evaluated at v = i.
GaussianInt v_derivation_invariant(const LaurentPoly2& p, unsigned a, int b);

/// Coefficient of h^a z^b after v := exp(h).
Rational taylor_invariant(const LaurentPoly2& p, unsigned a, int b);

Integer conway_coefficient(const LaurentPoly1& nabla, int k);

/// Polynomial of a connected sum of knots: the product.
LaurentPoly2 connected_sum_poly(const LaurentPoly2& p, const LaurentPoly2& q);

}  // namespace knotpoly
