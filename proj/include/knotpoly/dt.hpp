#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "knotpoly/diagram.hpp"

namespace knotpoly {

/// Dowker-Thistlethwaite code: entry i is the signed even label paired with
/// the odd label 2i+1. A positive entry means the even passage goes under.
using DTCode = std::vector<int>;

/// "4, 6, 2", "[4, 6, 2]" or "4 6 2".
DTCode parse_dt(std::string_view text);
std::string to_string(const DTCode& code);

/// Planar realization of a DT code. Among all choices of which side each
/// second passage crosses from, the lexicographically first one whose
/// rotation system is planar is used. The code fixes the knot only up to
/// mirror image, and so does this choice.
///
/// Throws std::invalid_argument for malformed or unrealizable codes.
PlanarDiagram realize_dt(const DTCode& code);

}  // namespace knotpoly
