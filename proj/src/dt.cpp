#include "knotpoly/dt.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>

namespace knotpoly {

DTCode parse_dt(std::string_view text) {
  DTCode code;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '[' || c == ']' || c == '(' || c == ')') {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (c == '-' || c == '+') ++i;
    std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (digits == i) throw ParseError("expected an even integer in DT code", start);
    code.push_back(std::stoi(std::string(text.substr(start, i - start))));
  }
  return code;
}

std::string to_string(const DTCode& code) {
  std::string out;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(code[i]);
  }
  return out;
}

namespace {

constexpr int kMaxRealizableCrossings = 24;

// Half-edge h = 4*crossing + position in the counterclockwise order.
struct Embedding {
  int c = 0;
  std::vector<int> pair;  // other end of the same arc

  int faces() const {
    std::vector<bool> seen(4 * c, false);
    int count = 0;
    for (int h0 = 0; h0 < 4 * c; ++h0) {
      if (seen[h0]) continue;
      ++count;
      for (int h = h0; !seen[h];) {
        seen[h] = true;
        int g = pair[h];
        h = (g & ~3) | ((g + 1) & 3);
      }
    }
    return count;
  }
};

}  // namespace

PlanarDiagram realize_dt(const DTCode& code) {
  const int c = static_cast<int>(code.size());
  if (c == 0) return PlanarDiagram::unknot();
  if (c > kMaxRealizableCrossings)
    throw std::invalid_argument("DT code longer than " + std::to_string(kMaxRealizableCrossings) +
                                " crossings is not supported");

  std::vector<bool> used(2 * c + 1, false);
  for (int e : code) {
    int a = std::abs(e);
    if (a % 2 != 0 || a < 2 || a > 2 * c || used[a])
      throw std::invalid_argument("DT code entries must be a signed permutation of 2, 4, ..., 2c");
    used[a] = true;
  }

  // passage label (1..2c) -> crossing index, and whether it is the odd passage
  std::vector<int> crossing_of(2 * c + 1);
  for (int i = 0; i < c; ++i) {
    crossing_of[2 * i + 1] = i;
    crossing_of[std::abs(code[i])] = i;
  }
  auto arc_in = [c](int t) { return t == 1 ? 2 * c : t - 1; };
  auto arc_out = [](int t) { return t; };

  // Counterclockwise roles at a crossing: P = odd passage, Q = even passage.
  // flip = false: (P_in, Q_in, P_out, Q_out); flip = true: (P_in, Q_out, P_out, Q_in).
  enum Role { P_in, P_out, Q_in, Q_out };
  auto position = [](Role r, bool flip) {
    switch (r) {
      case P_in: return 0;
      case P_out: return 2;
      case Q_in: return flip ? 3 : 1;
      default: return flip ? 1 : 3;
    }
  };
  auto out_role = [&](int t) { return t % 2 == 1 ? P_out : Q_out; };
  auto in_role = [&](int t) { return t % 2 == 1 ? P_in : Q_in; };

  Embedding emb;
  emb.c = c;
  emb.pair.assign(4 * c, -1);
  std::vector<bool> flip(c, false);
  auto build = [&]() {
    for (int t = 1; t <= 2 * c; ++t) {
      int u = t == 2 * c ? 1 : t + 1;
      int xa = crossing_of[t], xb = crossing_of[u];
      int ha = 4 * xa + position(out_role(t), flip[xa]);
      int hb = 4 * xb + position(in_role(u), flip[xb]);
      emb.pair[ha] = hb;
      emb.pair[hb] = ha;
    }
  };

  bool found = false;
  for (std::uint32_t mask = 0; mask < (1u << c); ++mask) {
    for (int i = 0; i < c; ++i) flip[i] = (mask >> (c - 1 - i)) & 1u;
    build();
    if (emb.faces() == c + 2) {
      found = true;
      break;
    }
  }
  if (!found) throw std::invalid_argument("DT code " + to_string(code) + " is not realizable");

  std::vector<Crossing> xs;
  xs.reserve(c);
  for (int i = 0; i < c; ++i) {
    int p = 2 * i + 1, q = std::abs(code[i]);
    std::array<int, 4> ccw{};
    ccw[position(P_in, flip[i])] = arc_in(p);
    ccw[position(P_out, flip[i])] = arc_out(p);
    ccw[position(Q_in, flip[i])] = arc_in(q);
    ccw[position(Q_out, flip[i])] = arc_out(q);
    bool even_under = code[i] > 0;
    int under_in = even_under ? position(Q_in, flip[i]) : position(P_in, flip[i]);
    int over_in = even_under ? position(P_in, flip[i]) : position(Q_in, flip[i]);
    Crossing x;
    for (int s = 0; s < 4; ++s) x.arcs[s] = ccw[(under_in + s) % 4];
    x.sign = ((over_in - under_in + 4) % 4 == 3) ? 1 : -1;
    xs.push_back(x);
  }
  return {std::move(xs), 0};
}

}  // namespace knotpoly
