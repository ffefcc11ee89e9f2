#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "knotpoly/integer.hpp"

namespace knotpoly {

class GaussianInt;

/// Sparse Laurent polynomial in one variable with integer coefficients.
/// Zero coefficients are never stored, so structural equality is equality.
class LaurentPoly1 {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPoly1() = default;
  LaurentPoly1(long c) { add_term(0, Integer(c)); }  // NOLINT: implicit by design of literals
  static LaurentPoly1 monomial(const Integer& c, int e);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coeff(int e) const;
  int min_exponent() const;
  int max_exponent() const;

  void add_term(int e, const Integer& c);

  LaurentPoly1& operator+=(const LaurentPoly1& o);
  LaurentPoly1& operator-=(const LaurentPoly1& o);
  LaurentPoly1& operator*=(const LaurentPoly1& o);
  friend LaurentPoly1 operator+(LaurentPoly1 p, const LaurentPoly1& q) { return p += q; }
  friend LaurentPoly1 operator-(LaurentPoly1 p, const LaurentPoly1& q) { return p -= q; }
  friend LaurentPoly1 operator*(const LaurentPoly1& p, const LaurentPoly1& q);
  LaurentPoly1 operator-() const;
  friend bool operator==(const LaurentPoly1&, const LaurentPoly1&) = default;

  /// Conventional rendering, highest exponent first: "-2*x^6 + x^4 - x^2 + 1".
  std::string to_string(std::string_view var = "x") const;

 private:
  Terms terms_;
};

/// Exponent pair of a two-variable monomial: `v` is the exponent of the
/// first variable (v for HOMFLY, a for Kauffman), `z` that of z.
/// Ordered by (z, v), which is also the canonical text order.
struct Exp2 {
  int v = 0;
  int z = 0;
  friend bool operator==(const Exp2&, const Exp2&) = default;
  friend auto operator<=>(const Exp2& l, const Exp2& r) {
    if (auto c = l.z <=> r.z; c != 0) return c;
    return l.v <=> r.v;
  }
};

/// Sparse two-variable Laurent polynomial with integer coefficients.
class LaurentPoly2 {
 public:
  using Terms = std::map<Exp2, Integer>;

  LaurentPoly2() = default;
  LaurentPoly2(long c) { add_term(0, 0, Integer(c)); }  // NOLINT
  static LaurentPoly2 monomial(const Integer& c, int v, int z);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coeff(int v, int z) const;

  void add_term(int v, int z, const Integer& c);

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  LaurentPoly2& operator*=(const LaurentPoly2& o);
  friend LaurentPoly2 operator+(LaurentPoly2 p, const LaurentPoly2& q) { return p += q; }
  friend LaurentPoly2 operator-(LaurentPoly2 p, const LaurentPoly2& q) { return p -= q; }
  friend LaurentPoly2 operator*(const LaurentPoly2& p, const LaurentPoly2& q);
  LaurentPoly2 operator-() const;
  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

  /// Multiply by c * v^dv * z^dz.
  LaurentPoly2 shifted(int dv, int dz, const Integer& c = 1) const;

  /// Canonical text: terms by (z, v) ascending, explicit coefficients,
  /// e.g. "2*v^2 - 1*v^4 + 1*v^2*z^2".
  std::string to_string(std::string_view var1 = "v", std::string_view var2 = "z") const;

 private:
  Terms terms_;
};

LaurentPoly2 pow(const LaurentPoly2& p, unsigned k);

/// Row of `p` multiplying z^b, as a polynomial in the first variable.
LaurentPoly1 coeff_of_z(const LaurentPoly2& p, int b);

/// Minimum and maximum first-variable exponents. Throws std::domain_error
/// ("undefined span") on the zero polynomial.
std::pair<int, int> v_span(const LaurentPoly2& p);

/// a-fold formal derivative; d/dv v^k = k v^(k-1) for every integer k.
LaurentPoly1 derivative(const LaurentPoly1& p, unsigned a);

/// Exact value at v = i in Z[i].
GaussianInt eval_at_i(const LaurentPoly1& p);

/// Parse text such as "-2*x^6 + x^4 - x^2 + 1" or "3*x^-2". Throws
/// std::invalid_argument.
LaurentPoly1 parse_laurent1(std::string_view text, std::string_view var = "x");
LaurentPoly2 parse_laurent2(std::string_view text, std::string_view var1 = "v",
                            std::string_view var2 = "z");

}  // namespace knotpoly
