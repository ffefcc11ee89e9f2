#include "knotpoly/invariants.hpp"

#include <stdexcept>

#include "knotpoly/gaussian.hpp"

namespace knotpoly {

LaurentPoly1 conway(const LaurentPoly2& homfly) {
  LaurentPoly1 out;
  for (const auto& [e, c] : homfly.terms()) out.add_term(e.z, c);
  return out;
}

Integer determinant_signed(const LaurentPoly1& nabla) {
  GaussianInt sum;
  for (const auto& [k, c] : nabla.terms()) {
    if (k < 0) throw std::domain_error("Conway polynomial with a negative exponent");
    Integer two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
    sum += GaussianInt::i_power(k) * GaussianInt(c * two_k);
  }
  if (sum.im() != 0) throw std::domain_error("nabla(2i) = " + sum.to_string() + " is not an integer");
  return sum.re();
}

int mfw_bound(const LaurentPoly2& homfly) {
  auto [lo, hi] = v_span(homfly);
  return (hi - lo) / 2 + 1;
}

}  // namespace knotpoly
