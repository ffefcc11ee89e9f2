#include "knotpoly/cabling.hpp"

#include <cstdlib>

namespace knotpoly {

BraidWord two_cable(const BraidWord& b, const CablePattern& pattern) {
  if (closure_components(b) != 1)
    throw std::invalid_argument("framed 2-cable requires a braid whose closure is a knot");
  std::vector<int> word;
  word.reserve(4 * b.letters.size());
  for (int e : b.letters) {
    const int i = std::abs(e);
    if (e > 0) word.insert(word.end(), {2 * i, 2 * i - 1, 2 * i + 1, 2 * i});
    else word.insert(word.end(), {-2 * i, -(2 * i + 1), -(2 * i - 1), -2 * i});
  }
  const int twist = 2 * (pattern.framing - exponent_sum(b));
  for (int k = 0; k < std::abs(twist); ++k) word.push_back(twist > 0 ? 1 : -1);
  return {2 * b.strands, std::move(word)};
}

WritheAudit cable_writhe_audit(const BraidWord& b, const BraidWord& cabled) {
  WritheAudit audit{2 * exponent_sum(b), exponent_sum(cabled)};
  if (audit.expected != audit.actual)
    throw std::logic_error("cable writhe audit failed: expected " + std::to_string(audit.expected) + ", got " +
                           std::to_string(audit.actual));
  return audit;
}

}  // namespace knotpoly
