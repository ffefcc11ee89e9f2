#pragma once

#include <map>
#include <vector>

#include "knotpoly/integer.hpp"
#include "knotpoly/laurent.hpp"

namespace knotpoly {

/// Power series in h truncated after h^cap, with exact rational coefficients.
class RationalSeries {
 public:
  explicit RationalSeries(unsigned cap = 0) : coeffs_(cap + 1) {}

  /// exp(c*h) = sum c^k/k! h^k, truncated.
  static RationalSeries exp(const Integer& c, unsigned cap);

  unsigned cap() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const Rational& operator[](unsigned k) const { return coeffs_.at(k); }
  Rational& operator[](unsigned k) { return coeffs_.at(k); }

  RationalSeries& operator+=(const RationalSeries& o);
  RationalSeries& scale(const Rational& c);
  friend RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
  friend bool operator==(const RationalSeries& a, const RationalSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
};

/// Rows of p after v := exp(h), keyed by z-exponent, truncated at h^cap.
/// Rows whose series vanish identically are dropped.
std::map<int, RationalSeries> exp_substitute(const LaurentPoly2& p, unsigned cap);

}  // namespace knotpoly
