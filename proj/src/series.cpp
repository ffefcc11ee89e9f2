#include "knotpoly/series.hpp"

#include <algorithm>


namespace knotpoly {

RationalSeries RationalSeries::exp(const Integer& c, unsigned cap) {
  RationalSeries s(cap);
  Rational term = 1;
  for (unsigned k = 0; k <= cap; ++k) {
    s.coeffs_[k] = term;
    term *= Rational(c, k + 1);
    term.canonicalize();
  }
  return s;
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& o) {
  if (o.cap() < cap()) coeffs_.resize(o.coeffs_.size());
  for (unsigned k = 0; k <= cap(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

RationalSeries& RationalSeries::scale(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  unsigned cap = std::min(a.cap(), b.cap());
  RationalSeries r(cap);
  for (unsigned i = 0; i <= cap; ++i)
    for (unsigned j = 0; i + j <= cap; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return r;
}

std::map<int, RationalSeries> exp_substitute(const LaurentPoly2& p, unsigned cap) {
  std::map<int, RationalSeries> rows;
  for (const auto& [e, c] : p.terms()) {
    auto term = RationalSeries::exp(e.v, cap).scale(Rational(c));
    auto [it, inserted] = rows.try_emplace(e.z, term);
    if (!inserted) it->second += term;
  }
  std::erase_if(rows, [cap](const auto& kv) {
    for (unsigned k = 0; k <= cap; ++k)
      if (kv.second[k] != 0) return false;
    return true;
  });
  return rows;
}

}  // namespace knotpoly
