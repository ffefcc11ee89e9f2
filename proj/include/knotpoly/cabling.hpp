#pragma once

#include <stdexcept>

#include "knotpoly/braid.hpp"

namespace knotpoly {

/// 2-cable with the given total framing (linking number of the two parallel
/// copies); framing 0 is the untwisted cable.
struct CablePattern {
  int framing = 0;
};

/// Each letter +-sigma_i becomes (sigma_2i sigma_2i-1 sigma_2i+1 sigma_2i)^+-1
/// on 2n strands, followed by sigma_1^(2(f - w)) with w the exponent sum of b.
/// Throws std::invalid_argument if the closure of b is not a knot.
BraidWord two_cable(const BraidWord& b, const CablePattern& pattern = {});

struct WritheAudit {
  int expected;
  int actual;
};

/// expected = 2 * exponent_sum(b), actual = exponent_sum(cabled). Throws
/// std::logic_error when they disagree.
WritheAudit cable_writhe_audit(const BraidWord& b, const BraidWord& cabled);

}  // namespace knotpoly
