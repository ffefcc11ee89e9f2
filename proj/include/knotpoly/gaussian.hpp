#pragma once

#include <string>

#include "knotpoly/integer.hpp"

namespace knotpoly {

/// Element re + im*i of Z[i].
class GaussianInt {
 public:
  GaussianInt() = default;
  GaussianInt(Integer re, Integer im = 0) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT

  /// i^k for any integer k.
  static GaussianInt i_power(long k);

  const Integer& re() const { return re_; }
  const Integer& im() const { return im_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }

  GaussianInt& operator+=(const GaussianInt& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianInt& operator-=(const GaussianInt& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
  friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
  friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  GaussianInt operator-() const { return {-re_, -im_}; }
  friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "a+bi" style, e.g. "3-2i", "-i", "0".
  std::string to_string() const;

 private:
  Integer re_{0};
  Integer im_{0};
};

}  // namespace knotpoly
