#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotpoly/braid.hpp"
#include "knotpoly/diagram.hpp"
#include "knotpoly/dt.hpp"
#include "knotpoly/laurent.hpp"
#include "knotpoly/skein.hpp"

namespace knotpoly {

/// A named knot with its presentations and expected invariants. Keys of
/// `expected`: "conway", "homfly", "kauffman", "determinant"; values are
/// canonical polynomial text (or a decimal integer for the determinant).
struct KnotRecord {
  std::string name;
  std::optional<DTCode> dt;
  std::optional<BraidWord> braid;
  int crossings = 0;
  std::map<std::string, std::string> expected;

  friend bool operator==(const KnotRecord&, const KnotRecord&) = default;
};

/// JSON array of records. Throws std::invalid_argument on schema
/// violations, duplicate names, records without dt and braid, and
/// unrealizable DT codes.
std::vector<KnotRecord> parse_table(std::string_view json_text);
std::vector<KnotRecord> load_table(const std::string& path);
std::string serialize_table(const std::vector<KnotRecord>& records);

/// Obverse record: braid letters and DT signs flipped, name prefixed "!"
/// (or the prefix removed). Expected checksums are conjugated accordingly.
KnotRecord obverse(const KnotRecord& r);

/// Look up "name" or "!name". Throws std::out_of_range for unknown names.
KnotRecord resolve(const std::vector<KnotRecord>& table, std::string_view name);

/// Diagram of the record: closure of its braid if present, else its DT
/// realization.
PlanarDiagram record_diagram(const KnotRecord& r);
LaurentPoly2 record_homfly(const KnotRecord& r, const SkeinConfig& cfg = {});
LaurentPoly2 record_kauffman(const KnotRecord& r, const SkeinConfig& cfg = {});

struct ValidationEntry {
  std::string knot;
  std::string invariant;
  bool passed = false;
  std::string expected;
  std::string actual;
};

/// Recomputes every expected checksum; when a record has both a braid and a
/// DT code, also checks that they give the same HOMFLY polynomial.
std::vector<ValidationEntry> validate_table(const std::vector<KnotRecord>& records, const SkeinConfig& cfg = {});

}  // namespace knotpoly
