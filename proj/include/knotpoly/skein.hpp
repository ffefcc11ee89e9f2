#pragma once

#include <cstddef>
#include <stdexcept>

#include "knotpoly/braid.hpp"
#include "knotpoly/diagram.hpp"
#include "knotpoly/laurent.hpp"

namespace knotpoly {

/// A computation hit one of the budgets in SkeinConfig. Engines never return
/// a truncated result.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Engine { diagram_skein, braid_algebra };

/// Cost knobs. No value here changes a computed polynomial.
struct SkeinConfig {
  std::size_t memo_capacity = 1u << 18;       // memoized diagram entries
  Engine engine = Engine::braid_algebra;       // used by homfly_braid
  unsigned parallel_workers = 1;
  std::size_t max_skein_nodes = 50'000'000;    // recursion nodes per call
  std::size_t max_state_bytes = std::size_t{4} << 30;  // braid-algebra state vector
};

/// HOMFLY polynomial P(v, z) with v^-1 P(L+) - v P(L-) = z P(L0), P(unknot) = 1,
/// by skein resolution of the diagram into descending diagrams.
LaurentPoly2 homfly(const PlanarDiagram& d, const SkeinConfig& cfg = {});

/// HOMFLY polynomial of the closure of a braid. Uses the braid-algebra engine
/// unless cfg.engine selects the diagram engine.
LaurentPoly2 homfly_braid(const BraidWord& b, const SkeinConfig& cfg = {});

/// Kauffman polynomial F(a, z), stored with the first exponent read as the
/// a-exponent. Regular-isotopy recursion L(D+) + L(D-) = z (L(D0) + L(Dinf)),
/// a positive curl multiplies L by a, F = a^-w L, F(unknot) = 1. This is
/// the convention of the KnotInfo tables.
LaurentPoly2 kauffman(const PlanarDiagram& d, const SkeinConfig& cfg = {});

}  // namespace knotpoly
