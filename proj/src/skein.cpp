#include "knotpoly/skein.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

namespace knotpoly {

namespace {

// Working diagram for the recursion. Slots are counterclockwise with the
// under-strand on slots 0/2. In oriented mode sign[k] is +-1 and slot 0 is
// the incoming under end; in unoriented mode sign is unused.
struct WorkDiagram {
  std::vector<std::array<int, 4>> x;
  std::vector<int> sign;
  int loops = 0;

  int size() const { return static_cast<int>(x.size()); }

  void erase(int k) {
    x.erase(x.begin() + k);
    sign.erase(sign.begin() + k);
  }
  void relabel(int from, int to) {
    for (auto& c : x)
      for (int& a : c)
        if (a == from) a = to;
  }
  int max_label() const {
    int m = 0;
    for (const auto& c : x)
      for (int a : c) m = std::max(m, a);
    return m;
  }
};

// Sign of a crossing given the entry slots of its under and over passes.
int passage_sign(int under_in, int over_in) {
  return (over_in == 3 ? 1 : -1) * (under_in == 0 ? 1 : -1);
}

struct SlotRef {
  int x = -1;
  int s = -1;
};

// Both ends of every arc label.
struct ArcEnds {
  std::vector<std::array<SlotRef, 2>> ends;

  explicit ArcEnds(const WorkDiagram& d) : ends(d.max_label() + 1) {
    for (int k = 0; k < d.size(); ++k)
      for (int s = 0; s < 4; ++s) {
        auto& e = ends[d.x[k][s]];
        (e[0].x < 0 ? e[0] : e[1]) = {k, s};
      }
  }
  // Leaving crossing k through slot s, where do we enter next?
  SlotRef across(const WorkDiagram& d, int k, int s) const {
    const auto& e = ends[d.x[k][s]];
    return (e[0].x == k && e[0].s == s) ? e[1] : e[0];
  }
};

class SkeinEngine {
 public:
  SkeinEngine(bool oriented, const SkeinConfig& cfg) : oriented_(oriented), cfg_(cfg) {
    if (oriented_) {
      // delta = (v^-1 - v) z^-1
      split_ = LaurentPoly2::monomial(1, -1, -1) - LaurentPoly2::monomial(1, 1, -1);
    } else {
      // mu = (a + a^-1) z^-1 - 1
      split_ = LaurentPoly2::monomial(1, 1, -1) + LaurentPoly2::monomial(1, -1, -1) - LaurentPoly2(1);
    }
  }

  LaurentPoly2 eval(WorkDiagram d) {
    if (++nodes_ > cfg_.max_skein_nodes)
      throw ResourceError("skein recursion exceeded " + std::to_string(cfg_.max_skein_nodes) + " nodes");

    LaurentPoly2 factor(1);
    remove_kinks(d, factor);

    auto pieces = split(d);
    int parts = static_cast<int>(pieces.size()) + d.loops;
    if (parts == 0) return LaurentPoly2(1);  // empty link; only reachable from empty input
    LaurentPoly2 result = factor * pow(split_, parts - 1);
    for (auto& piece : pieces) result *= eval_connected(std::move(piece));
    return result;
  }

 private:
  // Positive curl contributes a to L in the unoriented engine.
  void remove_kinks(WorkDiagram& d, LaurentPoly2& factor) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int k = 0; k < d.size() && !changed; ++k) {
        for (int s = 0; s < 4; ++s) {
          const auto c = d.x[k];
          if (c[s] != c[(s + 1) % 4]) continue;
          if (!oriented_) {
            // strand A enters at s+2 and leaves at s; strand B enters at s+1.
            int a_in = (s + 2) % 4, b_in = (s + 1) % 4;
            int sgn = (s % 2 == 0) ? passage_sign(a_in, b_in) : passage_sign(b_in, a_in);
            factor = factor.shifted(sgn, 0);
          }
          int t = c[(s + 2) % 4], u = c[(s + 3) % 4];
          d.erase(k);
          if (t == u) ++d.loops;
          else d.relabel(u, t);
          changed = true;
          break;
        }
      }
    }
  }

  static std::vector<WorkDiagram> split(const WorkDiagram& d) {
    const int n = d.size();
    std::vector<WorkDiagram> out;
    if (n == 0) return out;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    ArcEnds ends(d);
    for (const auto& e : ends.ends)
      if (e[0].x >= 0) parent[find(e[0].x)] = find(e[1].x);
    std::vector<int> piece_of(n, -1);
    for (int k = 0; k < n; ++k) {
      int r = find(k);
      if (piece_of[r] < 0) {
        piece_of[r] = static_cast<int>(out.size());
        out.emplace_back();
      }
      auto& p = out[piece_of[r]];
      p.x.push_back(d.x[k]);
      p.sign.push_back(d.sign[k]);
    }
    return out;
  }

  // Traversal of all components with chosen starting exits.
  struct Traversal {
    std::vector<int> first_under;  // per crossing: 1 if first met as under
    std::vector<int> comp_under, comp_over;
    std::vector<int> under_in, over_in;
    int components = 0;
    std::vector<int> order;        // crossings in order of first meeting
  };

  // Exits from which a component may be traversed.
  bool is_exit(const WorkDiagram& d, int k, int s) const {
    if (!oriented_) return true;
    return s == 2 || s == (d.sign[k] > 0 ? 1 : 3);
  }

  // Walk one component starting by leaving (k, s); calls visit(x, entry slot).
  template <typename Visit>
  static void walk(const WorkDiagram& d, const ArcEnds& ends, int k, int s, Visit visit) {
    const int k0 = k, s0 = s;
    do {
      SlotRef in = ends.across(d, k, s);
      visit(in.x, in.s);
      k = in.x;
      s = (in.s + 2) % 4;
    } while (!(k == k0 && s == s0));
  }

  Traversal traverse(const WorkDiagram& d) const {
    const int n = d.size();
    ArcEnds ends(d);
    // Identify components by a first pass, remembering passages.
    std::vector<std::array<int, 2>> comp_at(n, {-1, -1});  // [under, over]
    std::vector<std::vector<SlotRef>> comps;
    for (int k = 0; k < n; ++k)
      for (int s = 0; s < 4; ++s) {
        if (!is_exit(d, k, s)) continue;
        // the passage leaving (k,s) entered at (k, s+2)
        if (comp_at[k][s % 2] >= 0) continue;
        int c = static_cast<int>(comps.size());
        comps.emplace_back();
        walk(d, ends, k, s, [&](int x, int e) {
          comp_at[x][e % 2] = c;
          comps[c].push_back({x, e});
        });
      }

    Traversal t;
    t.components = static_cast<int>(comps.size());
    t.comp_under.resize(n);
    t.comp_over.resize(n);
    for (int k = 0; k < n; ++k) {
      t.comp_under[k] = comp_at[k][0];
      t.comp_over[k] = comp_at[k][1];
    }
    // For each component pick the start minimizing bad self-crossings.
    // A self-crossing is bad if its under-passage comes first.
    t.first_under.assign(n, 0);
    t.under_in.assign(n, -1);
    t.over_in.assign(n, -1);
    std::vector<int> seen(n, 0);
    for (int c = 0; c < t.components; ++c) {
      const auto& pass = comps[c];
      const int len = static_cast<int>(pass.size());
      int best_start = 0, best_bad = len + 1;
      std::vector<int> seen_at(n, -1);
      for (int st = 0; st < len; ++st) {
        int bad = 0;
        for (int j = 0; j < len; ++j) {
          const SlotRef& p = pass[(st + j) % len];
          if (t.comp_under[p.x] != t.comp_over[p.x]) continue;
          if (seen_at[p.x] != st) {
            seen_at[p.x] = st;
            if (p.s % 2 == 0) ++bad;
          }
        }
        if (bad < best_bad) {
          best_bad = bad;
          best_start = st;
        }
      }
      for (int j = 0; j < len; ++j) {
        const SlotRef& p = pass[(best_start + j) % len];
        (p.s % 2 == 0 ? t.under_in : t.over_in)[p.x] = p.s;
        if (seen[p.x]++ == 0) {
          t.first_under[p.x] = (p.s % 2 == 0);
          t.order.push_back(p.x);
        }
      }
    }
    return t;
  }

  LaurentPoly2 eval_connected(WorkDiagram d) {
    std::string key = canonical_key(d);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Switch the bad crossings of one fixed traversal in order; each switch
    // leaves a smoothed diagram with fewer crossings, and the fully switched
    // diagram is descending, hence an unlink.
    Traversal t = traverse(d);
    LaurentPoly2 result;
    LaurentPoly2 carry(1);
    std::vector<int> bad;
    for (int k : t.order)
      if (t.first_under[k]) bad.push_back(k);
    WorkDiagram cur = d;
    for (int k : bad) {
      if (oriented_) {
        WorkDiagram s0 = cur;
        const bool pos = cur.sign[k] > 0;
        smooth(s0, k, pos ? std::array<int, 4>{0, 1, 3, 2} : std::array<int, 4>{0, 3, 1, 2});
        // P+ = v^2 P- + v z P0 ;  P- = v^-2 P+ - v^-1 z P0
        if (pos) result += (carry * eval(std::move(s0))).shifted(1, 1);
        else result -= (carry * eval(std::move(s0))).shifted(-1, 1);
        carry = carry.shifted(pos ? 2 : -2, 0);
      } else {
        WorkDiagram sa = cur, sb = cur;
        smooth(sa, k, {0, 1, 2, 3});
        smooth(sb, k, {0, 3, 1, 2});
        // L(D) = -L(D switched) + z (L(D_A) + L(D_B))
        result += (carry * (eval(std::move(sa)) + eval(std::move(sb)))).shifted(0, 1);
        carry = -carry;
      }
      switch_crossing(cur, k);
    }
    LaurentPoly2 base = pow(split_, t.components - 1);
    if (!oriented_) {
      int w = 0;
      for (int k = 0; k < d.size(); ++k)
        if (t.comp_under[k] == t.comp_over[k])
          w += passage_sign(t.under_in[k], t.over_in[k]) * (t.first_under[k] ? -1 : 1);
      base = base.shifted(w, 0);
    }
    result += carry * base;
    if (memo_.size() < cfg_.memo_capacity) memo_.emplace(std::move(key), result);
    return result;
  }

  void switch_crossing(WorkDiagram& d, int k) const {
    auto& c = d.x[k];
    if (!oriented_) {
      c = {c[1], c[2], c[3], c[0]};
    } else if (d.sign[k] > 0) {
      c = {c[3], c[0], c[1], c[2]};
      d.sign[k] = -1;
    } else {
      c = {c[1], c[2], c[3], c[0]};
      d.sign[k] = 1;
    }
  }

  // Remove crossing k joining slot pairs (p[0],p[1]) and (p[2],p[3]).
  static void smooth(WorkDiagram& d, int k, std::array<int, 4> p) {
    const auto c = d.x[k];
    d.erase(k);
    // union of the four slot labels by pairing
    std::array<int, 4> lab = c;
    std::array<int, 4> cls = {0, 1, 2, 3};
    auto find = [&](int i) {
      while (cls[i] != i) i = cls[i];
      return i;
    };
    auto unite = [&](int i, int j) { cls[find(i)] = find(j); };
    unite(p[0], p[1]);
    unite(p[2], p[3]);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (lab[i] == lab[j]) unite(i, j);
    std::array<bool, 4> done{};
    for (int i = 0; i < 4; ++i) {
      int r = find(i);
      if (done[r]) continue;
      done[r] = true;
      std::vector<int> labels;
      for (int j = 0; j < 4; ++j)
        if (find(j) == r && std::find(labels.begin(), labels.end(), lab[j]) == labels.end())
          labels.push_back(lab[j]);
      int rep = -1;
      for (int a : labels) {
        bool present = false;
        for (const auto& x : d.x)
          for (int b : x) present |= (b == a);
        if (present) {
          rep = a;
          break;
        }
      }
      if (rep < 0) {
        ++d.loops;
        continue;
      }
      for (int a : labels)
        if (a != rep) d.relabel(a, rep);
    }
  }

  // Relabeling-invariant encoding of a connected diagram: the minimum over
  // all starting exits of a traversal-ordered serialization.
  std::string canonical_key(const WorkDiagram& d) const {
    const int n = d.size();
    ArcEnds ends(d);
    std::string best;
    std::vector<int> xl(n), rot(n);
    std::vector<int> al(ends.ends.size());
    std::string enc;
    for (int k0 = 0; k0 < n; ++k0)
      for (int s0 = 0; s0 < 4; ++s0) {
        if (!is_exit(d, k0, s0)) continue;
        std::fill(xl.begin(), xl.end(), -1);
        std::fill(al.begin(), al.end(), -1);
        int next_x = 0, next_a = 0;
        std::vector<int> order;
        auto label_x = [&](int x, int entry) {
          if (xl[x] >= 0) return;
          xl[x] = next_x++;
          rot[x] = oriented_ ? 0 : (entry & 2);
          order.push_back(x);
        };
        label_x(k0, (s0 + 2) % 4);
        int start_k = k0, start_s = s0;
        while (true) {
          int k = start_k, s = start_s;
          while (al[d.x[k][s]] < 0) {
            al[d.x[k][s]] = next_a++;
            SlotRef in = ends.across(d, k, s);
            label_x(in.x, in.s);
            k = in.x;
            s = (in.s + 2) % 4;
          }
          // next component: first unlabeled arc in crossing order
          start_k = -1;
          for (std::size_t i = 0; i < order.size() && start_k < 0; ++i) {
            int x = order[i];
            for (int j = 0; j < 4; ++j) {
              int s2 = (rot[x] + j) % 4;
              if (al[d.x[x][s2]] >= 0) continue;
              if (is_exit(d, x, s2)) {
                start_k = x;
                start_s = s2;
              } else {
                SlotRef other = ends.across(d, x, s2);
                start_k = other.x;
                start_s = other.s;
              }
              break;
            }
          }
          if (start_k < 0) break;
        }
        enc.clear();
        for (int x : order) {
          if (oriented_) enc += static_cast<char>(d.sign[x] > 0 ? '+' : '-');
          for (int j = 0; j < 4; ++j) {
            int a = al[d.x[x][(rot[x] + j) % 4]];
            enc += static_cast<char>(a & 0xff);
            enc += static_cast<char>(a >> 8);
          }
        }
        if (best.empty() || enc < best) best = enc;
      }
    return best;
  }

  bool oriented_;
  const SkeinConfig& cfg_;
  LaurentPoly2 split_;
  std::size_t nodes_ = 0;
  std::unordered_map<std::string, LaurentPoly2> memo_;
};

WorkDiagram to_work(const PlanarDiagram& d, bool oriented) {
  WorkDiagram w;
  for (const Crossing& x : d.crossings()) {
    w.x.push_back(x.arcs);
    w.sign.push_back(oriented ? x.sign : 0);
  }
  w.loops = d.free_loops();
  return w;
}

}  // namespace

LaurentPoly2 homfly(const PlanarDiagram& d, const SkeinConfig& cfg) {
  if (d.num_components() == 0) throw std::invalid_argument("HOMFLY polynomial of the empty link");
  SkeinEngine engine(true, cfg);
  return engine.eval(to_work(d, true));
}

LaurentPoly2 kauffman(const PlanarDiagram& d, const SkeinConfig& cfg) {
  if (d.num_components() == 0) throw std::invalid_argument("Kauffman polynomial of the empty link");
  SkeinEngine engine(false, cfg);
  return engine.eval(to_work(d, false)).shifted(-d.writhe(), 0);
}

}  // namespace knotpoly
