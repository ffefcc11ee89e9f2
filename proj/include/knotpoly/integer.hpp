#pragma once

#include <gmpxx.h>

#include <string>

namespace knotpoly {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& x) { return x.get_str(); }

inline std::string to_string(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_str();
}

}  // namespace knotpoly
