#include <doctest.h>

#include <random>

#include "knotpoly/diagram.hpp"
#include "knotpoly/dt.hpp"
#include "knotpoly/invariants.hpp"
#include "knotpoly/skein.hpp"
#include "knotpoly/vassiliev.hpp"
#include "suites.hpp"

using namespace knotpoly;

namespace {
LaurentPoly2 P(const char* s) { return parse_laurent2(s); }
LaurentPoly2 F(const char* s) { return parse_laurent2(s, "a", "z"); }
const LaurentPoly2 kDelta = parse_laurent2("v^-1*z^-1 - v*z^-1");

// P(closure of sigma_1^n) from the skein relation at one crossing.
LaurentPoly2 torus_2n(int n) {
  LaurentPoly2 prev = kDelta, cur(1);  // n = 0, 1
  for (int k = 2; k <= n; ++k) {
    LaurentPoly2 next = prev.shifted(2, 0) + cur.shifted(1, 1);
    prev = cur;
    cur = next;
  }
  return n == 0 ? prev : cur;
}
}  // namespace

TEST_CASE("HOMFLY normalization and small links") {
  CHECK(homfly(PlanarDiagram::unknot()) == LaurentPoly2(1));
  CHECK(homfly(PlanarDiagram::unlink(2)) == kDelta);
  CHECK(homfly(PlanarDiagram::unlink(3)) == kDelta * kDelta);
  CHECK(homfly_braid(BraidWord()) == LaurentPoly2(1));
  CHECK(homfly_braid(BraidWord(2, {})) == kDelta);
  CHECK(homfly(braid_closure(parse_braid("11"))) == P("v*z^-1 - v^3*z^-1 + v*z"));
  CHECK_THROWS_AS(homfly(PlanarDiagram()), std::invalid_argument);
}

TEST_CASE("HOMFLY of trefoil and figure-eight") {
  // v^-1 P(s^3) - v P(s) = z P(s^2), P(s^2) = v^2 delta + v z
  CHECK(homfly(braid_closure(parse_braid("111"))) == P("2*v^2 - v^4 + v^2*z^2"));
  CHECK(homfly_braid(parse_braid("111")) == P("2*v^2 - v^4 + v^2*z^2"));
  CHECK(homfly(realize_dt({4, 6, 2})) == P("2*v^2 - v^4 + v^2*z^2"));
  CHECK(homfly(braid_closure(parse_braid("-1-1-1"))) == P("2*v^-2 - v^-4 + v^-2*z^2"));
  // KnotInfo 4_1: (v^(-2)-1+v^2)-z^2
  CHECK(homfly(realize_dt({4, 6, 8, 2})) == P("v^-2 - 1 + v^2 - z^2"));
  CHECK(homfly_braid(parse_braid("1-21-2")) == P("v^-2 - 1 + v^2 - z^2"));
}

TEST_CASE("braid engine on torus links, all integer widths") {
  for (int n : {0, 1, 2, 5, 12, 40, 61, 64, 65, 100, 127, 130}) {
    BraidWord b(2, std::vector<int>(n, 1));
    CAPTURE(n);
    CHECK(homfly_braid(b) == torus_2n(n));
    CHECK(homfly_braid(mirror(b)) == conj_homfly(torus_2n(n)));
  }
  CHECK(homfly(braid_closure(BraidWord(2, std::vector<int>(25, 1)))) == torus_2n(25));
}

TEST_CASE("skein relation holds at random crossings") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 400; ++t) {
    BraidWord b = suites::random_braid(rng, 5, 10);
    if (b.letters.empty()) continue;
    const std::size_t i = rng() % b.letters.size();
    const int g = std::abs(b.letters[i]);
    BraidWord plus = b, minus = b, zero = b;
    plus.letters[i] = g;
    minus.letters[i] = -g;
    zero.letters.erase(zero.letters.begin() + static_cast<long>(i));
    const LaurentPoly2 lhs = homfly(braid_closure(plus)).shifted(-1, 0) - homfly(braid_closure(minus)).shifted(1, 0);
    CHECK(lhs == homfly(braid_closure(zero)).shifted(0, 1));
  }
}

TEST_CASE("Kauffman polynomial") {
  CHECK(kauffman(PlanarDiagram::unknot()) == LaurentPoly2(1));
  CHECK(kauffman(PlanarDiagram::unlink(2)) == F("a*z^-1 + a^-1*z^-1 - 1"));
  CHECK(kauffman(braid_closure(parse_braid("1"))) == LaurentPoly2(1));
  CHECK(kauffman(braid_closure(parse_braid("-1"))) == LaurentPoly2(1));
  // KnotInfo 3_1 (braid [1,1,1]) and 4_1
  const LaurentPoly2 tre = F("-a^-4 - 2*a^-2 + a^-5*z + a^-3*z + a^-4*z^2 + a^-2*z^2");
  CHECK(kauffman(braid_closure(parse_braid("111"))) == tre);
  CHECK(kauffman(realize_dt({4, 6, 2})) == tre);
  CHECK(kauffman(braid_closure(parse_braid("-1-1-1"))) == conj_kauffman(tre));
  CHECK(kauffman(realize_dt({4, 6, 8, 2})) ==
        F("-a^-2 - 1 - a^2 - a^-1*z - a*z + a^-2*z^2 + 2*z^2 + a^2*z^2 + a^-1*z^3 + a*z^3"));
  CHECK_THROWS_AS(kauffman(PlanarDiagram()), std::invalid_argument);
}

TEST_CASE("Jones specializations agree for knots") {
  const LaurentPoly2 tre = homfly_braid(parse_braid("111"));
  // right trefoil: t + t^3 - t^4 with s = t^(1/4)
  CHECK(suites::jones_from_homfly(tre) == parse_laurent1("s^4 + s^12 - s^16", "s"));
  CHECK(suites::jones_from_kauffman(kauffman(braid_closure(parse_braid("111")))) == suites::jones_from_homfly(tre));
}

TEST_CASE("multiplicativity under connected sum") {
  std::mt19937_64 rng(9);
  int done = 0;
  while (done < 60) {
    BraidWord b1 = suites::random_braid(rng, 4, 7), b2 = suites::random_braid(rng, 4, 7);
    if (closure_components(b1) != 1 || closure_components(b2) != 1) continue;
    ++done;
    PlanarDiagram d1 = braid_closure(b1), d2 = braid_closure(b2);
    PlanarDiagram s = connected_sum(d1, d2);
    CHECK(s.num_components() == 1);
    CHECK(homfly(s) == homfly(d1) * homfly(d2));
    CHECK(kauffman(s) == kauffman(d1) * kauffman(d2));
  }
}

TEST_CASE("configuration changes cost only") {
  std::mt19937_64 rng(17);
  SkeinConfig no_memo;
  no_memo.memo_capacity = 0;
  for (int t = 0; t < 50; ++t) {
    PlanarDiagram d = braid_closure(suites::random_braid(rng, 5, 10));
    CHECK(homfly(d, no_memo) == homfly(d));
    CHECK(kauffman(d, no_memo) == kauffman(d));
  }
  SkeinConfig par;
  par.parallel_workers = 4;
  for (int t = 0; t < 3; ++t) {
    BraidWord b(8, {});
    for (int k = 0; k < 30; ++k) {
      int g = 1 + static_cast<int>(rng() % 7);
      b.letters.push_back(rng() & 1 ? g : -g);
    }
    CHECK(homfly_braid(b, par) == homfly_braid(b));
  }
}

TEST_CASE("resource budgets are reported, never truncated") {
  SkeinConfig tiny;
  tiny.max_state_bytes = 1024;
  CHECK_THROWS_AS(homfly_braid(parse_braid("1234567"), tiny), ResourceError);
  SkeinConfig few;
  few.max_skein_nodes = 3;
  CHECK_THROWS_AS(homfly(braid_closure(parse_braid("1-21-21-2")), few), ResourceError);
  CHECK_THROWS_AS(homfly_braid(BraidWord(13, {12})), ResourceError);
}

TEST_CASE("Conway polynomial, determinant, MFW bound") {
  CHECK(conway(LaurentPoly2(1)) == LaurentPoly1(1));
  CHECK(conway(P("2*v^2 - v^4 + v^2*z^2")) == parse_laurent1("1 + x^2"));
  CHECK(determinant_signed(parse_laurent1("1 + x^2")) == -3);
  CHECK(determinant_signed(LaurentPoly1(1)) == 1);
  CHECK(determinant_signed(parse_laurent1("1 - 2*x^2 - x^4")) == -7);
  CHECK_THROWS_AS(determinant_signed(parse_laurent1("x")), std::domain_error);
  CHECK(mfw_bound(LaurentPoly2(1)) == 1);
  CHECK(mfw_bound(P("2*v^2 - v^4 + v^2*z^2")) == 2);
  CHECK_THROWS_AS(mfw_bound(LaurentPoly2()), std::domain_error);
}

TEST_CASE("Conway specialization of random knots") {
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 200) {
    BraidWord b = suites::random_braid(rng, 5, 12);
    if (closure_components(b) != 1) continue;
    ++done;
    LaurentPoly1 n = conway(homfly_braid(b));
    CHECK(n.coeff(0) == 1);
    for (const auto& [k, c] : n.terms()) CHECK(k % 2 == 0);
  }
}
