#include "suites.hpp"

#include <cstdlib>

#include "knotpoly/cabling.hpp"
#include "knotpoly/diagram.hpp"
#include "knotpoly/grid.hpp"
#include "knotpoly/knotdb.hpp"
#include "knotpoly/skein.hpp"
#include "knotpoly/vassiliev.hpp"

using namespace knotpoly;

namespace suites {

BraidWord random_braid(std::mt19937_64& rng, int max_strands, int max_letters) {
  int n = std::uniform_int_distribution<int>(1, max_strands)(rng);
  int len = n == 1 ? 0 : std::uniform_int_distribution<int>(0, max_letters)(rng);
  std::vector<int> w;
  for (int k = 0; k < len; ++k) {
    int g = std::uniform_int_distribution<int>(1, n - 1)(rng);
    w.push_back(rng() & 1 ? g : -g);
  }
  return {n, w};
}

LaurentPoly2 random_poly2(std::mt19937_64& rng, int terms, int span) {
  LaurentPoly2 p;
  std::uniform_int_distribution<int> e(-span, span);
  std::uniform_int_distribution<long> c(-1'000'000'000'000L, 1'000'000'000'000L);
  int k = std::uniform_int_distribution<int>(0, terms)(rng);
  for (int i = 0; i < k; ++i) {
    Integer x(std::to_string(rng() % 3 == 0 ? c(rng) : c(rng) % 50));
    p.add_term(e(rng), e(rng), x);
  }
  return p;
}

bool parity_ok(const LaurentPoly2& p, int components) {
  const int r = (components - 1) & 1;
  for (const auto& [e, c] : p.terms())
    if ((e.v & 1) != r || (e.z & 1) != r) return false;
  return true;
}

namespace {

// Substitute var1 -> sign * s^k and z -> zimg into a polynomial with no
// negative z powers.
LaurentPoly1 specialize(const LaurentPoly2& p, int sign, int k, const LaurentPoly1& zimg) {
  LaurentPoly1 out;
  for (const auto& [e, c] : p.terms()) {
    if (e.z < 0) throw std::domain_error("negative z power");
    LaurentPoly1 t = LaurentPoly1::monomial((sign < 0 && (e.v & 1)) ? Integer(-c) : c, k * e.v);
    for (int j = 0; j < e.z; ++j) t *= zimg;
    out += t;
  }
  return out;
}

std::string braid_label(const BraidWord& b) { return "B" + std::to_string(b.strands) + " [" + to_string(b) + "]"; }

}  // namespace

LaurentPoly1 jones_from_homfly(const LaurentPoly2& p) {
  return specialize(p, 1, 4, LaurentPoly1::monomial(1, 2) - LaurentPoly1::monomial(1, -2));
}

LaurentPoly1 jones_from_kauffman(const LaurentPoly2& f) {
  return specialize(f, -1, -3, LaurentPoly1::monomial(1, 1) + LaurentPoly1::monomial(1, -1));
}

Result cross_engine(int exhaustive_len, long samples, std::uint64_t seed) {
  Result res;
  SkeinConfig diag;
  diag.engine = Engine::diagram_skein;
  auto check = [&](const BraidWord& b) {
    ++res.cases;
    LaurentPoly2 h = homfly_braid(b);
    LaurentPoly2 d = homfly(braid_closure(b));
    if (h != d) res.fail(braid_label(b) + ": braid " + h.to_string() + " vs diagram " + d.to_string());
    if (!parity_ok(h, closure_components(b))) res.fail(braid_label(b) + ": parity violated by " + h.to_string());
    if (homfly_braid(b, diag) != d) res.fail(braid_label(b) + ": engine selector mismatch");
  };
  for (int n = 1; n <= 4; ++n) {
    const int alphabet = 2 * (n - 1);
    for (int len = 0; len <= (n == 1 ? 0 : exhaustive_len); ++len) {
      std::vector<int> digit(len, 0);
      while (true) {
        std::vector<int> w(len);
        for (int i = 0; i < len; ++i) w[i] = digit[i] < n - 1 ? digit[i] + 1 : -(digit[i] - (n - 1) + 1);
        check(BraidWord(n, w));
        int i = len - 1;
        while (i >= 0 && ++digit[i] == alphabet) digit[i--] = 0;
        if (i < 0) break;
      }
    }
  }
  std::mt19937_64 rng(seed);
  for (long s = 0; s < samples; ++s) check(random_braid(rng, 4, 8));
  return res;
}

Result markov_invariance(long samples, std::uint64_t seed) {
  Result res;
  std::mt19937_64 rng(seed);
  for (long s = 0; s < samples; ++s) {
    BraidWord b = random_braid(rng, 5, 12);
    BraidWord moved;
    std::string move;
    const int kind = static_cast<int>(rng() % 3);
    if (kind == 0 && b.strands > 1) {
      int g = std::uniform_int_distribution<int>(1, b.strands - 1)(rng);
      if (rng() & 1) g = -g;
      moved = markov_move(b, markov::Conjugate{g});
      move = "conjugate " + std::to_string(g);
    } else if (kind == 1 || b.strands == 1) {
      int sign = rng() & 1 ? 1 : -1;
      moved = markov_move(b, markov::Stabilize{sign});
      move = "stabilize " + std::to_string(sign);
    } else {
      // destabilize a stabilized word and compare both ends
      BraidWord up = markov_move(b, markov::Stabilize{rng() & 1 ? 1 : -1});
      moved = markov_move(up, markov::Destabilize{});
      if (moved != b) res.fail(braid_label(b) + ": destabilize did not invert stabilize");
      b = up;
      move = "destabilize";
    }
    ++res.cases;
    const PlanarDiagram d0 = braid_closure(b), d1 = braid_closure(moved);
    const LaurentPoly2 h0 = homfly_braid(b);
    if (homfly_braid(moved) != h0) res.fail(braid_label(b) + " " + move + ": braid-engine HOMFLY changed");
    if (homfly(d1) != homfly(d0)) res.fail(braid_label(b) + " " + move + ": diagram HOMFLY changed");
    if (kauffman(d1) != kauffman(d0)) res.fail(braid_label(b) + " " + move + ": Kauffman changed");
    if (!parity_ok(h0, d0.num_components())) res.fail(braid_label(b) + ": parity");
  }
  return res;
}

Result mirror_covariance(long samples, std::uint64_t seed) {
  Result res;
  std::mt19937_64 rng(seed);
  for (long s = 0; s < samples; ++s) {
    BraidWord b = random_braid(rng, 5, 10);
    ++res.cases;
    const PlanarDiagram d = braid_closure(b);
    const PlanarDiagram m = mirror(d);
    const LaurentPoly2 h = homfly(d), hm = homfly(m);
    if (hm != conj_homfly(h)) res.fail(braid_label(b) + ": HOMFLY of mirror is not the conjugate");
    if (homfly_braid(knotpoly::mirror(b)) != hm) res.fail(braid_label(b) + ": mirrored braid disagrees");
    if (kauffman(m) != conj_kauffman(kauffman(d))) res.fail(braid_label(b) + ": Kauffman of mirror is not the conjugate");
    if (!parity_ok(hm, m.num_components())) res.fail(braid_label(b) + ": parity of mirror");
    if (mirror(m) != d) res.fail(braid_label(b) + ": mirror is not an involution");
  }
  return res;
}

Result jones_consistency(long samples, std::uint64_t seed) {
  Result res;
  std::mt19937_64 rng(seed);
  while (res.cases < samples) {
    BraidWord b = random_braid(rng, 5, 12);
    if (closure_components(b) != 1) continue;
    ++res.cases;
    const PlanarDiagram d = braid_closure(b);
    if (jones_from_homfly(homfly_braid(b)) != jones_from_kauffman(kauffman(d)))
      res.fail(braid_label(b) + ": Jones specializations of HOMFLY and Kauffman differ");
  }
  return res;
}

Result grid_round_trip(long samples, std::uint64_t seed) {
  Result res;
  std::mt19937_64 rng(seed);
  for (long s = 0; s < samples; ++s) {
    ++res.cases;
    LaurentPoly2 p = random_poly2(rng, 30, 12);
    std::optional<std::string> word;
    std::optional<int> alg;
    if (rng() & 1) {
      BraidWord b = random_braid(rng, 9, 20);
      word = to_string(b);
      alg = exponent_sum(b);
    }
    GridDocument g = make_grid(p, word, alg);
    GridDocument back = parse_grid(render_grid(g));
    if (grid_polynomial(back) != p || back.braid != word || back.algebraic_crossings != alg)
      res.fail("grid round trip failed for " + p.to_string());
  }
  return res;
}

Result table_round_trip(const std::string& table_path, long samples, std::uint64_t seed) {
  Result res;
  auto table = load_table(table_path);
  ++res.cases;
  if (parse_table(serialize_table(table)) != table) res.fail("bundled table does not round-trip");
  std::mt19937_64 rng(seed);
  for (long s = 0; s < samples; ++s) {
    ++res.cases;
    std::vector<KnotRecord> records;
    const int k = static_cast<int>(rng() % 5);
    for (int i = 0; i < k; ++i) {
      KnotRecord r;
      r.name = "k" + std::to_string(i) + "_" + std::to_string(rng() % 1000);
      r.braid = random_braid(rng, 6, 12);
      // strand count must survive the text format: 1 + max index
      int top = 0;
      for (int e : r.braid->letters) top = std::max(top, std::abs(e));
      r.braid->strands = top + 1;
      if (rng() & 1) r.dt = DTCode{4, 6, 2};
      r.crossings = static_cast<int>(rng() % 20);
      if (rng() & 1) r.expected["homfly"] = random_poly2(rng, 5, 4).to_string();
      if (rng() & 1) r.expected["conway"] = "x^2 + 1";
      records.push_back(std::move(r));
    }
    if (parse_table(serialize_table(records)) != records) res.fail("random table does not round-trip");
  }
  return res;
}

Result cable_audit(long samples, std::uint64_t seed) {
  Result res;
  std::mt19937_64 rng(seed);
  while (res.cases < samples) {
    BraidWord b = random_braid(rng, 5, 10);
    if (closure_components(b) != 1) continue;
    ++res.cases;
    const int framing = std::uniform_int_distribution<int>(-3, 3)(rng);
    BraidWord c = two_cable(b, CablePattern{framing});
    const PlanarDiagram d = braid_closure(c);
    if (d.num_components() != 2) {
      res.fail(braid_label(b) + ": cable has " + std::to_string(d.num_components()) + " components");
      continue;
    }
    if (linking_number(d, 0, 1) != framing) res.fail(braid_label(b) + ": linking number differs from framing");
    if (exponent_sum(c) != 2 * exponent_sum(b) + 2 * framing) res.fail(braid_label(b) + ": cable exponent sum");
    if (framing == 0) {
      auto audit = cable_writhe_audit(b, c);
      if (audit.expected != audit.actual) res.fail(braid_label(b) + ": writhe audit");
    }
  }
  return res;
}

Result cable_markov_trefoil() {
  Result res;
  const BraidWord base = parse_braid("111");
  const BraidWord variants[] = {
      markov_move(base, markov::Stabilize{1}),
      markov_move(base, markov::Conjugate{-1}),
      markov_move(markov_move(base, markov::Stabilize{-1}), markov::Conjugate{2}),
      parse_braid("1-21-2"),  // figure-eight: control, must differ
  };
  const LaurentPoly2 ref = homfly_braid(two_cable(base));
  for (int i = 0; i < 3; ++i) {
    ++res.cases;
    if (homfly_braid(two_cable(variants[i])) != ref) res.fail("trefoil word " + to_string(variants[i]) + " gives a different cable");
  }
  ++res.cases;
  if (closure_components(variants[3]) == 1 && homfly_braid(two_cable(variants[3])) == ref)
    res.fail("control knot has the trefoil's cable polynomial");
  return res;
}

}  // namespace suites
