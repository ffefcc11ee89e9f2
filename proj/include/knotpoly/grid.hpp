#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotpoly/laurent.hpp"

namespace knotpoly {

/// Coefficient table in the layout of the Morton-Short program output:
/// one column per v-exponent, one row per z-exponent, both ascending.
struct GridDocument {
  std::vector<int> v_exponents;
  std::vector<int> z_exponents;
  std::vector<std::vector<Integer>> cells;  // cells[row][column]
  std::optional<std::string> braid;
  std::optional<int> algebraic_crossings;

  friend bool operator==(const GridDocument&, const GridDocument&) = default;
};

/// Columns and rows run over the full exponent ranges of p, in steps of 2
/// when all exponents share a parity and steps of 1 otherwise.
GridDocument make_grid(const LaurentPoly2& p, std::optional<std::string> braid = std::nullopt,
                       std::optional<int> algebraic_crossings = std::nullopt);
LaurentPoly2 grid_polynomial(const GridDocument& g);

std::string render_grid(const GridDocument& g);
/// Inverse of render_grid. Throws std::invalid_argument on malformed text.
GridDocument parse_grid(std::string_view text);

}  // namespace knotpoly
