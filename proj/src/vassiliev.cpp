#include "knotpoly/vassiliev.hpp"

#include "knotpoly/series.hpp"

namespace knotpoly {

LaurentPoly2 conj_homfly(const LaurentPoly2& p) {
  LaurentPoly2 out;
  for (const auto& [e, c] : p.terms()) out.add_term(-e.v, e.z, e.v % 2 == 0 ? c : Integer(-c));
  return out;
}

LaurentPoly2 conj_kauffman(const LaurentPoly2& p) {
  LaurentPoly2 out;
  for (const auto& [e, c] : p.terms()) out.add_term(-e.v, e.z, c);
  return out;
}

LaurentPoly2 conjugate(const LaurentPoly2& p, PolyKind kind) {
  return kind == PolyKind::homfly ? conj_homfly(p) : conj_kauffman(p);
}

bool is_self_conjugate(const LaurentPoly2& p, PolyKind kind) { return conjugate(p, kind) == p; }

GaussianInt v_derivation_invariant(const LaurentPoly2& p, unsigned a, int b) {
  return eval_at_i(derivative(coeff_of_z(p, b), a));
}

Rational taylor_invariant(const LaurentPoly2& p, unsigned a, int b) {
  const LaurentPoly1 r = coeff_of_z(p, b);
  LaurentPoly2 row;
  for (const auto& [v, c] : r.terms()) row.add_term(v, 0, c);
  auto rows = exp_substitute(row, a);
  auto it = rows.find(0);
  return it == rows.end() ? Rational(0) : it->second[a];
}

Integer conway_coefficient(const LaurentPoly1& nabla, int k) { return nabla.coeff(k); }

LaurentPoly2 connected_sum_poly(const LaurentPoly2& p, const LaurentPoly2& q) { return p * q; }

}  // namespace knotpoly
