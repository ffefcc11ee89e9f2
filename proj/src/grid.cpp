#include "knotpoly/grid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace knotpoly {

namespace {

constexpr int kCellWidth = 10;

std::vector<int> exponent_range(const std::vector<int>& present) {
  if (present.empty()) return {};
  auto [lo, hi] = std::minmax_element(present.begin(), present.end());
  const bool same_parity =
      std::all_of(present.begin(), present.end(), [&](int e) { return ((e - *lo) & 1) == 0; });
  std::vector<int> out;
  for (int e = *lo; e <= *hi; e += same_parity ? 2 : 1) out.push_back(e);
  return out;
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string trim(std::string_view s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return std::string(s.substr(a, b - a + 1));
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = std::stoi(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad integer '" + s + "' in grid");
  return v;
}

}  // namespace

GridDocument make_grid(const LaurentPoly2& p, std::optional<std::string> braid,
                       std::optional<int> algebraic_crossings) {
  GridDocument g;
  g.braid = std::move(braid);
  g.algebraic_crossings = algebraic_crossings;
  std::vector<int> vs, zs;
  for (const auto& [e, c] : p.terms()) {
    vs.push_back(e.v);
    zs.push_back(e.z);
  }
  g.v_exponents = exponent_range(vs);
  g.z_exponents = exponent_range(zs);
  g.cells.assign(g.z_exponents.size(), std::vector<Integer>(g.v_exponents.size(), Integer(0)));
  for (std::size_t r = 0; r < g.z_exponents.size(); ++r)
    for (std::size_t c = 0; c < g.v_exponents.size(); ++c) g.cells[r][c] = p.coeff(g.v_exponents[c], g.z_exponents[r]);
  return g;
}

LaurentPoly2 grid_polynomial(const GridDocument& g) {
  LaurentPoly2 p;
  for (std::size_t r = 0; r < g.z_exponents.size(); ++r)
    for (std::size_t c = 0; c < g.v_exponents.size(); ++c)
      if (g.cells[r][c] != 0) p.add_term(g.v_exponents[c], g.z_exponents[r], g.cells[r][c]);
  return p;
}

std::string render_grid(const GridDocument& g) {
  std::size_t width = kCellWidth;
  for (const auto& row : g.cells)
    for (const auto& x : row) width = std::max(width, x.get_str().size() + 1);
  for (int v : g.v_exponents) width = std::max(width, std::to_string(v).size() + 1);

  std::ostringstream out;
  if (g.braid) out << "braid            : " << *g.braid << "\n\n";
  if (g.algebraic_crossings) out << "algebraic cross no: " << pad_left(std::to_string(*g.algebraic_crossings), 2) << "\n\n";
  for (int v : g.v_exponents) out << pad_left(std::to_string(v), width);
  out << "\n    " << std::string(std::max<std::size_t>(6 * g.v_exponents.size(), 1) - 1, '_') << "\n\n";
  for (std::size_t r = 0; r < g.z_exponents.size(); ++r) {
    for (const auto& x : g.cells[r]) out << pad_left(x == 0 ? "" : x.get_str(), width);
    out << "     | " << pad_left(std::to_string(g.z_exponents[r]), 2) << "\n";
  }
  return out.str();
}

GridDocument parse_grid(std::string_view text) {
  GridDocument g;
  std::vector<std::string> lines;
  {
    std::string s(text);
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
  }
  std::size_t i = 0;
  auto skip_blank = [&] {
    while (i < lines.size() && trim(lines[i]).empty()) ++i;
  };
  skip_blank();
  if (i < lines.size() && lines[i].rfind("braid", 0) == 0) {
    auto colon = lines[i].find(':');
    if (colon == std::string::npos) throw std::invalid_argument("grid braid line without ':'");
    g.braid = trim(std::string_view(lines[i]).substr(colon + 1));
    ++i;
    skip_blank();
  }
  if (i < lines.size() && lines[i].rfind("algebraic cross no", 0) == 0) {
    auto colon = lines[i].find(':');
    if (colon == std::string::npos) throw std::invalid_argument("grid crossing-number line without ':'");
    g.algebraic_crossings = to_int(trim(std::string_view(lines[i]).substr(colon + 1)));
    ++i;
    skip_blank();
  }
  if (i >= lines.size()) return g;  // zero polynomial

  // header: column right edges
  std::vector<std::size_t> right_edge;
  {
    const std::string& h = lines[i];
    for (std::size_t p = 0; p < h.size();) {
      if (h[p] == ' ') {
        ++p;
        continue;
      }
      std::size_t q = h.find(' ', p);
      if (q == std::string::npos) q = h.size();
      g.v_exponents.push_back(to_int(h.substr(p, q - p)));
      right_edge.push_back(q);
      p = q;
    }
    ++i;
  }
  for (; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (trim(line).empty() || trim(line).find_first_not_of('_') == std::string::npos) continue;
    auto bar = line.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("grid row without '|': " + line);
    g.z_exponents.push_back(to_int(trim(std::string_view(line).substr(bar + 1))));
    std::vector<Integer> row(g.v_exponents.size(), Integer(0));
    const std::string cells = line.substr(0, bar);
    for (std::size_t p = 0; p < cells.size();) {
      if (cells[p] == ' ') {
        ++p;
        continue;
      }
      std::size_t q = cells.find(' ', p);
      if (q == std::string::npos) q = cells.size();
      auto col = std::find(right_edge.begin(), right_edge.end(), q);
      if (col == right_edge.end()) throw std::invalid_argument("misaligned grid cell in row: " + line);
      row[col - right_edge.begin()] = Integer(cells.substr(p, q - p));
      p = q;
    }
    g.cells.push_back(std::move(row));
  }
  return g;
}

}  // namespace knotpoly
