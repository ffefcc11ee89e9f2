#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "knotpoly/braid.hpp"

namespace knotpoly {

/// One crossing of an oriented diagram. Slots are listed counterclockwise
/// starting at the incoming under-strand, so the under-strand runs
/// slot 0 -> slot 2. The over-strand runs 3 -> 1 when sign is +1 and
/// 1 -> 3 when sign is -1 (right-hand rule).
struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 1;

  int over_in() const { return sign > 0 ? 3 : 1; }
  int over_out() const { return sign > 0 ? 1 : 3; }
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Oriented link diagram: signed crossings joined by arcs, plus components
/// that carry no crossings at all (`free_loops`).
///
/// Construction validates the data and relabels arcs 1..2c in traversal
/// order, one component after another, so equal diagrams compare equal.
class PlanarDiagram {
 public:
  PlanarDiagram() = default;  // empty link
  PlanarDiagram(std::vector<Crossing> crossings, int free_loops);

  static PlanarDiagram unknot() { return {{}, 1}; }
  static PlanarDiagram unlink(int components) { return {{}, components}; }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int free_loops() const { return free_loops_; }
  int num_crossings() const { return static_cast<int>(crossings_.size()); }

  /// Components with at least one crossing, each an ordered arc list;
  /// free loops come after these in component numbering.
  const std::vector<std::vector<int>>& arc_components() const { return components_; }
  int num_components() const { return static_cast<int>(components_.size()) + free_loops_; }
  /// Component index of an arc label.
  int component_of_arc(int arc) const { return arc_component_.at(arc); }
  /// Components of the under and over strands of crossing k.
  std::pair<int, int> crossing_components(int k) const;

  int writhe() const;

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;

 private:
  void normalize();

  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  std::vector<std::vector<int>> components_;
  std::vector<int> arc_component_;  // indexed by arc label, entry 0 unused
};

struct DiagramStats {
  int writhe;
  int components;
  int crossings;
  friend bool operator==(const DiagramStats&, const DiagramStats&) = default;
};

DiagramStats pd_stats(const PlanarDiagram& d);

/// Half the signed count of crossings between two distinct components.
/// Throws std::invalid_argument for c1 == c2 or out-of-range components.
int linking_number(const PlanarDiagram& d, int c1, int c2);

/// Switch every crossing: the obverse link.
PlanarDiagram mirror(const PlanarDiagram& d);

/// Trace closure of a braid. Positive letters give positive crossings.
PlanarDiagram braid_closure(const BraidWord& b);

/// Connected sum of two knot diagrams, cut open at arc 1 of each.
PlanarDiagram connected_sum(const PlanarDiagram& a, const PlanarDiagram& b);

/// Line format: "loops N" plus one "<sign> a b c d" line per crossing;
/// '#' starts a comment.
std::string to_text(const PlanarDiagram& d);
PlanarDiagram parse_diagram(std::string_view text);

}  // namespace knotpoly
