#include "knotpoly/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace knotpoly {

PlanarDiagram::PlanarDiagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  if (free_loops_ < 0) throw std::invalid_argument("negative free loop count");
  normalize();
}

void PlanarDiagram::normalize() {
  // arc label -> (crossing, slot) of its incoming and outgoing ends
  struct Ends {
    int head_x = -1, head_s = -1;
    int tail_x = -1, tail_s = -1;
  };
  std::map<int, Ends> ends;
  for (int k = 0; k < num_crossings(); ++k) {
    const Crossing& x = crossings_[k];
    if (x.sign != 1 && x.sign != -1) throw std::invalid_argument("crossing sign must be +1 or -1");
    for (int s = 0; s < 4; ++s) {
      Ends& e = ends[x.arcs[s]];
      bool incoming = (s == 0 || s == x.over_in());
      int& ex = incoming ? e.head_x : e.tail_x;
      int& es = incoming ? e.head_s : e.tail_s;
      if (ex != -1)
        throw std::invalid_argument("arc " + std::to_string(x.arcs[s]) +
                                    " has two ends with the same orientation");
      ex = k;
      es = s;
    }
  }
  for (const auto& [a, e] : ends)
    if (e.head_x < 0 || e.tail_x < 0)
      throw std::invalid_argument("arc " + std::to_string(a) + " does not appear exactly twice");

  std::map<int, int> relabel;
  components_.clear();
  int next = 1;
  for (const auto& [start, e0] : ends) {
    if (relabel.count(start)) continue;
    std::vector<int> comp;
    int a = start;
    do {
      relabel[a] = next;
      comp.push_back(next++);
      const Ends& e = ends[a];
      const Crossing& x = crossings_[e.head_x];
      a = x.arcs[(e.head_s + 2) % 4];
    } while (a != start);
    components_.push_back(std::move(comp));
  }
  for (Crossing& x : crossings_)
    for (int& a : x.arcs) a = relabel.at(a);

  arc_component_.assign(next, -1);
  for (int c = 0; c < static_cast<int>(components_.size()); ++c)
    for (int a : components_[c]) arc_component_[a] = c;
}

std::pair<int, int> PlanarDiagram::crossing_components(int k) const {
  const Crossing& x = crossings_.at(k);
  return {arc_component_[x.arcs[0]], arc_component_[x.arcs[1]]};
}

int PlanarDiagram::writhe() const {
  int w = 0;
  for (const Crossing& x : crossings_) w += x.sign;
  return w;
}

DiagramStats pd_stats(const PlanarDiagram& d) {
  return {d.writhe(), d.num_components(), d.num_crossings()};
}

int linking_number(const PlanarDiagram& d, int c1, int c2) {
  if (c1 == c2) throw std::invalid_argument("linking number needs two distinct components");
  if (c1 < 0 || c2 < 0 || c1 >= d.num_components() || c2 >= d.num_components())
    throw std::invalid_argument("component index out of range");
  int sum = 0;
  for (int k = 0; k < d.num_crossings(); ++k) {
    auto [u, o] = d.crossing_components(k);
    if ((u == c1 && o == c2) || (u == c2 && o == c1)) sum += d.crossings()[k].sign;
  }
  return sum / 2;
}

PlanarDiagram mirror(const PlanarDiagram& d) {
  std::vector<Crossing> xs;
  xs.reserve(d.crossings().size());
  for (const Crossing& x : d.crossings()) {
    const auto& a = x.arcs;
    if (x.sign > 0) xs.push_back({{a[3], a[0], a[1], a[2]}, -1});
    else xs.push_back({{a[1], a[2], a[3], a[0]}, 1});
  }
  return {std::move(xs), d.free_loops()};
}

PlanarDiagram braid_closure(const BraidWord& b) {
  const int n = b.strands;
  std::vector<int> cur(n);
  for (int p = 0; p < n; ++p) cur[p] = p + 1;
  int next = n + 1;
  std::vector<Crossing> xs;
  xs.reserve(b.letters.size());
  for (int e : b.letters) {
    int l = std::abs(e) - 1, r = l + 1;
    int in_l = cur[l], in_r = cur[r];
    int out_l = next++, out_r = next++;
    if (e > 0) xs.push_back({{in_r, out_r, out_l, in_l}, 1});
    else xs.push_back({{in_l, in_r, out_r, out_l}, -1});
    cur[l] = out_l;
    cur[r] = out_r;
  }
  int loops = 0;
  std::map<int, int> close;
  for (int p = 0; p < n; ++p) {
    if (cur[p] == p + 1) ++loops;
    else close[cur[p]] = p + 1;
  }
  for (Crossing& x : xs)
    for (int& a : x.arcs)
      if (auto it = close.find(a); it != close.end()) a = it->second;
  return {std::move(xs), loops};
}

PlanarDiagram connected_sum(const PlanarDiagram& a, const PlanarDiagram& b) {
  if (a.num_components() != 1 || b.num_components() != 1)
    throw std::invalid_argument("connected sum is defined here for knot diagrams only");
  if (a.num_crossings() == 0) return b;
  if (b.num_crossings() == 0) return a;
  const int off = 2 * a.num_crossings();
  std::vector<Crossing> xs = a.crossings();
  for (Crossing x : b.crossings()) {
    for (int& arc : x.arcs) arc += off;
    xs.push_back(x);
  }
  // Arc 1 of each summand is cut; reconnect tail(a) -> head(b), tail(b) -> head(a).
  auto is_head = [](const Crossing& x, int s) { return s == 0 || s == x.over_in(); };
  const int na = a.num_crossings();
  for (int k = 0; k < static_cast<int>(xs.size()); ++k) {
    Crossing& x = xs[k];
    for (int s = 0; s < 4; ++s) {
      if (k < na && x.arcs[s] == 1 && is_head(x, s)) x.arcs[s] = 1 + off;
      else if (k >= na && x.arcs[s] == 1 + off && is_head(x, s)) x.arcs[s] = 1;
    }
  }
  return {std::move(xs), 0};
}

std::string to_text(const PlanarDiagram& d) {
  std::ostringstream out;
  out << "loops " << d.free_loops() << '\n';
  for (const Crossing& x : d.crossings()) {
    out << (x.sign > 0 ? "+1" : "-1");
    for (int a : x.arcs) out << ' ' << a;
    out << '\n';
  }
  return out.str();
}

PlanarDiagram parse_diagram(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Crossing> xs;
  int loops = 0;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    std::size_t here = offset;
    offset += line.size() + 1;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "loops") {
      if (!(ls >> loops)) throw ParseError("bad loops line", here);
      continue;
    }
    Crossing x;
    try {
      x.sign = std::stoi(head);
    } catch (const std::exception&) {
      throw ParseError("bad crossing sign '" + head + "'", here);
    }
    for (int& a : x.arcs)
      if (!(ls >> a)) throw ParseError("crossing line needs four arc ids", here);
    std::string extra;
    if (ls >> extra) throw ParseError("trailing data on crossing line", here);
    xs.push_back(x);
  }
  return {std::move(xs), loops};
}

}  // namespace knotpoly
