#include "knotpoly/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

namespace knotpoly {

BraidWord::BraidWord(int n, std::vector<int> word) : strands(n), letters(std::move(word)) {
  if (n < 1) throw std::invalid_argument("braid needs at least one strand");
  for (int e : letters)
    if (e == 0 || std::abs(e) > n - 1)
      throw std::invalid_argument("braid letter " + std::to_string(e) + " out of range for " +
                                  std::to_string(n) + " strands");
}

namespace {

int strands_for(const std::vector<int>& letters) {
  int m = 0;
  for (int e : letters) m = std::max(m, std::abs(e));
  return m + 1;
}

BraidWord parse_digits(std::string_view s) {
  std::vector<int> letters;
  bool neg = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '-') {
      if (neg) throw ParseError("repeated '-' in braid word", i);
      neg = true;
    } else if (c >= '1' && c <= '9') {
      letters.push_back(neg ? -(c - '0') : c - '0');
      neg = false;
    } else if (c == '0') {
      throw ParseError("generator index 0 in braid word", i);
    } else {
      throw ParseError(std::string("invalid character '") + c + "' in braid word", i);
    }
  }
  if (neg) throw ParseError("dangling '-' at end of braid word", s.size());
  return {strands_for(letters), std::move(letters)};
}

BraidWord parse_list(std::string_view s) {
  std::vector<int> letters;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',') {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (s[i] == '-' || s[i] == '+') ++i;
    std::size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (digits == i) throw ParseError("expected generator index", i < s.size() ? i : start);
    if (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != ',')
      throw ParseError(std::string("invalid character '") + s[i] + "' in braid word", i);
    int v = std::stoi(std::string(s.substr(start, i - start)));
    if (v == 0) throw ParseError("generator index 0 in braid word", start);
    letters.push_back(v);
  }
  return {strands_for(letters), std::move(letters)};
}

}  // namespace

BraidWord parse_braid(std::string_view text) {
  // trim
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  bool list = std::any_of(text.begin(), text.end(),
                          [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ','; });
  return list ? parse_list(text) : parse_digits(text);
}

std::string to_string(const BraidWord& b) {
  bool digits = std::all_of(b.letters.begin(), b.letters.end(), [](int e) { return std::abs(e) <= 9; });
  std::string out;
  for (std::size_t i = 0; i < b.letters.size(); ++i) {
    if (!digits && i > 0) out += ' ';
    out += std::to_string(b.letters[i]);
  }
  return out;
}

int exponent_sum(const BraidWord& b) {
  return std::accumulate(b.letters.begin(), b.letters.end(), 0,
                         [](int acc, int e) { return acc + (e > 0 ? 1 : -1); });
}

BraidWord mirror(const BraidWord& b) {
  BraidWord r = b;
  for (int& e : r.letters) e = -e;
  return r;
}

std::vector<int> strand_permutation(const BraidWord& b) {
  // pos[p] = strand currently at position p, tracked top to bottom.
  std::vector<int> at(b.strands);
  std::iota(at.begin(), at.end(), 0);
  for (int e : b.letters) {
    int i = std::abs(e) - 1;
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> perm(b.strands);
  for (int p = 0; p < b.strands; ++p) perm[at[p]] = p;
  return perm;
}

int closure_components(const BraidWord& b) {
  auto perm = strand_permutation(b);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

BraidWord markov_move(const BraidWord& b, const MarkovMove& move) {
  struct Visitor {
    const BraidWord& b;
    BraidWord operator()(const markov::Conjugate& c) const {
      if (c.letter == 0 || std::abs(c.letter) > b.strands - 1)
        throw std::invalid_argument("conjugating letter out of range");
      std::vector<int> w;
      w.reserve(b.letters.size() + 2);
      w.push_back(-c.letter);
      w.insert(w.end(), b.letters.begin(), b.letters.end());
      w.push_back(c.letter);
      return {b.strands, std::move(w)};
    }
    BraidWord operator()(const markov::Stabilize& s) const {
      if (s.sign != 1 && s.sign != -1) throw std::invalid_argument("stabilization sign must be +1 or -1");
      std::vector<int> w = b.letters;
      w.push_back(s.sign * b.strands);
      return {b.strands + 1, std::move(w)};
    }
    BraidWord operator()(const markov::Destabilize&) const {
      const int top = b.strands - 1;
      if (b.letters.empty() || std::abs(b.letters.back()) != top)
        throw std::invalid_argument("destabilization needs a last letter on the top generator");
      auto uses = std::count_if(b.letters.begin(), b.letters.end(), [top](int e) { return std::abs(e) == top; });
      if (uses != 1) throw std::invalid_argument("top generator occurs more than once");
      std::vector<int> w(b.letters.begin(), b.letters.end() - 1);
      return {b.strands - 1, std::move(w)};
    }
  };
  return std::visit(Visitor{b}, move);
}

}  // namespace knotpoly
