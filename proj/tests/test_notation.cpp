#include <doctest.h>

#include <random>

#include "knotpoly/braid.hpp"
#include "knotpoly/diagram.hpp"
#include "knotpoly/dt.hpp"
#include "knotpoly/invariants.hpp"
#include "knotpoly/skein.hpp"
#include "suites.hpp"

using namespace knotpoly;

static const char* kCableWord = "-2-3-1-287986576-4-5-3-4-4-5-3-421326576-4-5-3-48798-2-3-1-26576-4-5-3-4-6-7-5-68798";

TEST_CASE("parse_braid") {
  BraidWord b = parse_braid(kCableWord);
  CHECK(b.letters.size() == 56);
  CHECK(b.strands == 10);
  int pos = 0, neg = 0, top = 0;
  for (int e : b.letters) {
    (e > 0 ? pos : neg)++;
    top = std::max(top, std::abs(e));
  }
  CHECK(pos == 28);
  CHECK(neg == 28);
  CHECK(top == 9);
  CHECK(parse_braid("") == BraidWord(1, {}));
  CHECK(parse_braid("121") == BraidWord(3, {1, 2, 1}));
  CHECK(parse_braid("-2 -3 10").strands == 11);
  CHECK(parse_braid("1, -2, 3") == BraidWord(4, {1, -2, 3}));
}

TEST_CASE("parse_braid errors carry positions") {
  try {
    parse_braid("12x3");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  try {
    parse_braid("-10");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_braid("1-"), ParseError);
  CHECK_THROWS_AS(parse_braid("1 0"), ParseError);
}

TEST_CASE("braid text round trip") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    BraidWord b = suites::random_braid(rng, 12, 15);
    int top = 0;
    for (int e : b.letters) top = std::max(top, std::abs(e));
    b.strands = top + 1;
    CHECK(parse_braid(to_string(b)) == b);
  }
}

TEST_CASE("exponent sum and mirror") {
  CHECK(exponent_sum(parse_braid(kCableWord)) == 0);
  CHECK(exponent_sum(parse_braid("121")) == 3);
  CHECK(exponent_sum(parse_braid("-1-1")) == -2);
  CHECK(mirror(parse_braid("1")) == parse_braid("-1"));
  CHECK(mirror(BraidWord()) == BraidWord());
  BraidWord b = parse_braid(kCableWord);
  CHECK(mirror(mirror(b)) == b);
}

TEST_CASE("Markov moves") {
  CHECK(markov_move(BraidWord(2, {1, 1}), markov::Stabilize{1}) == BraidWord(3, {1, 1, 2}));
  CHECK(markov_move(BraidWord(2, {1}), markov::Conjugate{1}) == BraidWord(2, {-1, 1, 1}));
  CHECK(markov_move(BraidWord(3, {1, 1, 2}), markov::Destabilize{}) == BraidWord(2, {1, 1}));
  CHECK_THROWS_AS(markov_move(BraidWord(3, {2, 1, 2}), markov::Destabilize{}), std::invalid_argument);
  CHECK_THROWS_AS(markov_move(BraidWord(3, {1, 1}), markov::Destabilize{}), std::invalid_argument);
  CHECK_THROWS_AS(markov_move(BraidWord(2, {1}), markov::Conjugate{2}), std::invalid_argument);
}

TEST_CASE("braid closure statistics") {
  CHECK(pd_stats(braid_closure(BraidWord())) == DiagramStats{0, 1, 0});
  CHECK(pd_stats(PlanarDiagram::unknot()) == DiagramStats{0, 1, 0});
  CHECK(pd_stats(braid_closure(parse_braid("11"))) == DiagramStats{2, 2, 2});
  CHECK(pd_stats(braid_closure(parse_braid(kCableWord))) == DiagramStats{0, 2, 56});
  CHECK(closure_components(parse_braid(kCableWord)) == 2);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    BraidWord b = suites::random_braid(rng, 6, 14);
    auto s = pd_stats(braid_closure(b));
    CHECK(s.writhe == exponent_sum(b));
    CHECK(s.components == closure_components(b));
    CHECK(s.crossings == static_cast<int>(b.letters.size()));
  }
}

TEST_CASE("linking numbers") {
  CHECK(linking_number(braid_closure(parse_braid("11")), 0, 1) == 1);
  CHECK(linking_number(braid_closure(parse_braid("-1-1")), 0, 1) == -1);
  CHECK(linking_number(PlanarDiagram::unlink(2), 0, 1) == 0);
  CHECK(linking_number(braid_closure(parse_braid(kCableWord)), 0, 1) == 0);
  CHECK_THROWS_AS(linking_number(braid_closure(parse_braid("11")), 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(linking_number(braid_closure(parse_braid("11")), 0, 2), std::invalid_argument);
}

TEST_CASE("diagram mirror") {
  CHECK(mirror(PlanarDiagram::unknot()) == PlanarDiagram::unknot());
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    PlanarDiagram d = braid_closure(suites::random_braid(rng, 5, 10));
    CHECK(mirror(mirror(d)) == d);
    CHECK(mirror(d).writhe() == -d.writhe());
    CHECK(mirror(d).num_components() == d.num_components());
  }
}

TEST_CASE("diagram validation") {
  CHECK_THROWS_AS(PlanarDiagram({Crossing{{1, 2, 3, 4}, 1}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(PlanarDiagram({Crossing{{1, 1, 2, 2}, 2}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(PlanarDiagram({}, -1), std::invalid_argument);
}

TEST_CASE("diagram text format round trip") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    PlanarDiagram d = braid_closure(suites::random_braid(rng, 5, 10));
    CHECK(parse_diagram(to_text(d)) == d);
  }
  CHECK(parse_diagram("# unlink\nloops 2\n") == PlanarDiagram::unlink(2));
  CHECK_THROWS(parse_diagram("+1 1 2 3\n"));
}

TEST_CASE("DT codes") {
  CHECK(parse_dt("4, 6, 2") == DTCode{4, 6, 2});
  CHECK(parse_dt("[4, -8, 2]") == DTCode{4, -8, 2});
  CHECK(parse_dt("4 6 2") == DTCode{4, 6, 2});
  CHECK_THROWS(parse_dt("4, x"));

  PlanarDiagram tre = realize_dt({4, 6, 2});
  CHECK(pd_stats(tre).crossings == 3);
  CHECK(pd_stats(tre).components == 1);
  CHECK(conway(homfly(tre)) == parse_laurent1("1 + x^2"));
  CHECK(conway(homfly(realize_dt({4, 6, 8, 2}))) == parse_laurent1("1 - x^2"));
  CHECK(realize_dt({}) == PlanarDiagram::unknot());
  CHECK(mirror(realize_dt({4, 6, 2})) == realize_dt({-4, -6, -2}));

  CHECK_THROWS_AS(realize_dt({4, 4, 2}), std::invalid_argument);
  CHECK_THROWS_AS(realize_dt({3, 6, 2}), std::invalid_argument);
  // interlacement graph is a 5-cycle: odd common neighbourhood, not planar
  CHECK_THROWS_AS(realize_dt({4, 6, 8, 10, 2}), std::invalid_argument);
}

TEST_CASE("connected sum of diagrams") {
  PlanarDiagram t = braid_closure(parse_braid("111"));
  PlanarDiagram s = connected_sum(t, t);
  CHECK(pd_stats(s) == DiagramStats{6, 1, 6});
  CHECK(connected_sum(t, PlanarDiagram::unknot()).num_crossings() == 3);
}
