#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotpoly/knotdb.hpp"
#include "knotpoly/laurent.hpp"
#include "knotpoly/skein.hpp"

namespace knotpoly {

struct Witness {
  std::string invariant;
  std::string on_knot;
  std::string on_obverse;
};

struct ChiralityReport {
  std::string knot;
  LaurentPoly2 homfly;
  LaurentPoly2 kauffman;
  bool homfly_self_conjugate = true;
  bool kauffman_self_conjugate = true;
  Integer determinant;
  int determinant_sign = 1;
  std::optional<LaurentPoly2> cable_homfly;
  std::optional<bool> cable_homfly_self_conjugate;
  std::vector<Witness> witnesses;

  /// Some test in the report shows K != !K.
  bool chirality_detected() const { return !witnesses.empty(); }
};

/// Cable analysis runs only when include_cable is set and the record has a
/// braid word. A negative determinant counts as detection (signature not
/// divisible by 4).
ChiralityReport chirality_report(const KnotRecord& record, bool include_cable, const SkeinConfig& cfg = {});

}  // namespace knotpoly
