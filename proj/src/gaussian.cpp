#include "knotpoly/gaussian.hpp"

namespace knotpoly {

GaussianInt GaussianInt::i_power(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

std::string GaussianInt::to_string() const {
  if (im_ == 0) return re_.get_str();
  std::string out;
  if (re_ != 0) out = re_.get_str();
  if (im_ > 0 && re_ != 0) out += '+';
  if (im_ == -1) out += '-';
  else if (im_ != 1) out += im_.get_str();
  out += 'i';
  return out;
}

}  // namespace knotpoly
