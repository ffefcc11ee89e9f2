#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace knotpoly {

/// Input text rejected by a parser; `position` is the 0-based offending offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A braid on `strands` strands. Letter e != 0 is the generator sigma_|e|
/// raised to sign(e); every |e| lies in 1..strands-1.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> word);

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Morton-Short digit notation ("-2-3-1-2879...", generators 1..9) or a
/// whitespace/comma separated integer list ("-2 -3 10"). The strand count
/// is 1 + the largest generator index.
BraidWord parse_braid(std::string_view text);

/// Inverse of parse_braid for words whose strand count is 1 + max index:
/// digit notation when every index is below 10, integer list otherwise.
std::string to_string(const BraidWord& b);

int exponent_sum(const BraidWord& b);

/// Flip every letter; the closure becomes the obverse.
BraidWord mirror(const BraidWord& b);

/// Underlying permutation: result[p] is the bottom position reached from top
/// position p (0-based).
std::vector<int> strand_permutation(const BraidWord& b);

/// Number of components of the closure (cycles of the permutation).
int closure_components(const BraidWord& b);

namespace markov {
/// w -> g^-1 w g
struct Conjugate {
  int letter;
};
/// w in B_n -> w sigma_n^sign in B_{n+1}
struct Stabilize {
  int sign;
};
/// inverse of Stabilize; requires the last letter to be the only occurrence
/// of sigma_{n-1}
struct Destabilize {};
}  // namespace markov

using MarkovMove = std::variant<markov::Conjugate, markov::Stabilize, markov::Destabilize>;

/// Throws std::invalid_argument when the move does not apply.
BraidWord markov_move(const BraidWord& b, const MarkovMove& move);

}  // namespace knotpoly
