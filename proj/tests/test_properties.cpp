#include <doctest.h>

#include "suites.hpp"

#define CHECK_SUITE(expr)          \
  do {                             \
    const auto r = (expr);         \
    INFO(r.failure);               \
    CHECK(r.ok);                   \
    CHECK(r.cases > 0);            \
  } while (0)

TEST_CASE("cross-engine agreement") { CHECK_SUITE(suites::cross_engine(5, 2000, 101)); }
TEST_CASE("Markov invariance") { CHECK_SUITE(suites::markov_invariance(500, 102)); }
TEST_CASE("mirror covariance") { CHECK_SUITE(suites::mirror_covariance(500, 103)); }
TEST_CASE("Jones specializations") { CHECK_SUITE(suites::jones_consistency(300, 104)); }
TEST_CASE("grid round trip") { CHECK_SUITE(suites::grid_round_trip(500, 105)); }
TEST_CASE("table round trip") { CHECK_SUITE(suites::table_round_trip(KNOT_DATA_DIR "/knots.json", 300, 106)); }
TEST_CASE("cable audit") { CHECK_SUITE(suites::cable_audit(300, 107)); }
TEST_CASE("cables of Markov-equivalent trefoils") { CHECK_SUITE(suites::cable_markov_trefoil()); }
