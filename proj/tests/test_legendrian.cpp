#include <doctest.h>

#include <random>

#include "seifert/legendrian/front.hpp"
#include "seifert/legendrian/resolution.hpp"
#include "seifert/parse_error.hpp"
#include "support/random_front.hpp"

using namespace seifert;
using namespace seifert::legendrian;

namespace {

std::size_t loops(const ResolvedDiagram& r) {
  std::size_t n = 0;
  for (const auto& c : r.crossings) n += c.origin == CrossingOrigin::RightCuspLoop;
  return n;
}

}  // namespace

TEST_CASE("front parsing and printing") {
  const auto f = FrontDiagram::parse("L0 L2 X1:+ X1:+ X1:+ R2 R0");
  CHECK(f == family_front(1));
  CHECK(f.max_strands() == 4);
  CHECK(f.components() == 1);
  CHECK(f.to_string() == "L0 L2 X1:+ X1:+ X1:+ R2 R0");
  CHECK(FrontDiagram::parse(f.to_string()) == f);
  CHECK(FrontDiagram::parse("  L0\n R0 ") == unknot_front());

  CHECK_THROWS_AS(FrontDiagram::parse("L0 Q1"), ParseError);
  CHECK_THROWS_AS(FrontDiagram::parse("L0 X0 R0"), ParseError);
  CHECK_THROWS_AS(FrontDiagram::parse("L0 X0:* R0"), ParseError);
  CHECK_THROWS_AS(FrontDiagram::parse("L R0"), ParseError);
}

TEST_CASE("invalid event words") {
  const auto event_of = [](const char* text) -> std::size_t {
    try {
      FrontDiagram::parse(text);
    } catch (const InvalidFront& e) {
      return e.event();
    }
    return 999;
  };
  CHECK(event_of("L0 L0") == 2);    // unclosed at the end
  CHECK(event_of("R0") == 0);       // nothing to join
  CHECK(event_of("L1 R0") == 0);    // cusp above the live count
  CHECK(event_of("L0 X1:+ R0") == 1);
  CHECK(event_of("L0 R1") == 1);
  CHECK(event_of("") == 999);
  CHECK_THROWS_AS(validate_events({FrontEvent::left(0)}), InvalidFront);
  CHECK_NOTHROW(validate_events({FrontEvent::left(0), FrontEvent::right(0)}));
  try {
    FrontDiagram::parse("L0 L0");
  } catch (const InvalidFront& e) {
    CHECK(std::string(e.what()).find("event 3") != std::string::npos);
  }
}

TEST_CASE("stored signs must match the traced orientation of a knot") {
  CHECK_THROWS_AS(FrontDiagram::parse("L0 L2 X1:- X1:+ X1:+ R2 R0"), InvalidFront);
  CHECK_THROWS_AS(FrontDiagram::parse("L0 L2 X1:- X1:- X1:- R2 R0"), InvalidFront);
  // Links are oriented per component, so stored signs are accepted as given.
  CHECK_NOTHROW(FrontDiagram::parse("L0 L2 X1:- X1:- R2 R0"));
  CHECK_NOTHROW(FrontDiagram::parse("L0 L2 X1:+ X1:+ R2 R0"));
}

TEST_CASE("examples: cusps, crossings, writhe and tb") {
  const auto u = unknot_front();
  CHECK(cusps(u).total() == 2);
  CHECK(crossing_count(u) == 0);
  CHECK(writhe(u) == 0);
  CHECK(thurston_bennequin(u) == -1);

  const auto f1 = family_front(1);
  CHECK(cusps(f1).left == 2);
  CHECK(cusps(f1).right == 2);
  CHECK(crossing_count(f1) == 3);
  CHECK(writhe(f1) == 3);
  CHECK(thurston_bennequin(f1) == 1);

  const auto four = FrontDiagram::parse("L0 L2 R1 R0");
  CHECK(four.components() == 1);
  CHECK(cusps(four).total() == 4);
  CHECK(thurston_bennequin(four) == -2);

  const auto hopf = FrontDiagram::parse("L0 L2 X1:+ X1:+ R2 R0");
  CHECK(hopf.components() == 2);
  CHECK_THROWS_AS(thurston_bennequin(hopf), std::domain_error);
  CHECK(FrontDiagram::parse("L0 R0 L0 R0").components() == 2);
}

TEST_CASE("family_front for n up to 100") {
  CHECK_THROWS_AS(family_front(0), std::invalid_argument);
  for (int n = 1; n <= 100; ++n) {
    const auto f = family_front(n);
    CHECK(f.components() == 1);
    CHECK(f.max_strands() == 4);
    CHECK(cusps(f).total() == 4);
    CHECK(crossing_count(f) == static_cast<std::size_t>(2 * n + 1));
    CHECK(writhe(f) == 2 * n + 1);
    CHECK(thurston_bennequin(f) == 2 * n - 1);
    for (int s : traced_crossing_signs(f)) CHECK(s >= 0);
  }
}

TEST_CASE("resolution examples") {
  const auto r = ng_resolution(unknot_front());
  REQUIRE(r.crossings.size() == 1);
  CHECK(r.crossings[0] == ResolvedCrossing{CrossingOrigin::RightCuspLoop, 1, -1});
  CHECK(blackboard_writhe(r) == -1);

  const auto r3 = ng_resolution(family_front(1));
  CHECK(r3.crossings.size() == 5);
  CHECK(blackboard_writhe(r3) == 1);
  CHECK(ng_resolution(FrontDiagram()).crossings.empty());
  CHECK(blackboard_writhe(ResolvedDiagram{}) == 0);

  const auto f = family_front(2);
  const auto rf = ng_resolution(f);
  CHECK(rf.crossings.size() == 7);
  CHECK(loops(rf) == 2);
  CHECK(blackboard_writhe(rf) == thurston_bennequin(f));
}

TEST_CASE("property: traced signs agree with the graph-walk oracle") {
  std::mt19937_64 rng(31);
  int knots = 0, links = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const auto ev = oracle::random_front(rng, 4 + static_cast<int>(rng() % 14), false);
    const auto t = oracle::trace_front(ev);
    const FrontDiagram f(ev);
    CHECK(f.components() == t.components);
    if (t.components != 1) {
      ++links;
      continue;
    }
    ++knots;
    CHECK(traced_crossing_signs(f) == t.signs);
  }
  CHECK(knots > 200);
  CHECK(links > 200);
}

TEST_CASE("property: tb equals the blackboard writhe of the resolution") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 1000; ++trial) {
    const FrontDiagram f(oracle::random_front(rng, 4 + static_cast<int>(rng() % 16), true));
    const auto r = ng_resolution(f);
    CHECK(loops(r) == cusps(f).right);
    CHECK(r.crossings.size() == crossing_count(f) + cusps(f).right);
    CHECK(cusps(f).left == cusps(f).right);
    CHECK(blackboard_writhe(r) == thurston_bennequin(f));
    for (const auto& c : r.crossings)
      if (c.origin == CrossingOrigin::RightCuspLoop) CHECK(c.sign == -1);
  }
}

TEST_CASE("property: commuting disjoint events preserves all invariants") {
  std::mt19937_64 rng(33);
  int moved = 0, undone = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const FrontDiagram f(oracle::random_front(rng, 6 + static_cast<int>(rng() % 14), true));
    for (std::size_t k = 0; k + 1 < f.size(); ++k) {
      const auto g = commute(f, k);
      if (!g) continue;
      ++moved;
      CHECK(g->components() == 1);
      CHECK(thurston_bennequin(*g) == thurston_bennequin(f));
      CHECK(writhe(*g) == writhe(f));
      CHECK(crossing_count(*g) == crossing_count(f));
      CHECK(g->events()[k].kind == f.events()[k + 1].kind);
      // A right cusp followed by a left cusp in the same gap has two valid
      // preimages, so only some swaps can be undone.
      if (const auto back = commute(*g, k)) {
        ++undone;
        CHECK(*back == f);
      }
    }
  }
  CHECK(moved > 500);
  CHECK(undone > moved / 2);
}

TEST_CASE("commute refuses interacting events") {
  const auto f = family_front(1);
  CHECK_FALSE(commute(f, 1));
  CHECK_FALSE(commute(f, 2));
  CHECK_FALSE(commute(f, 4));
  const auto g0 = commute(f, 0);
  REQUIRE(g0);
  CHECK(g0->to_string() == "L0 L0 X1:+ X1:+ X1:+ R2 R0");
  const auto split = FrontDiagram::parse("L0 L2 R0 R0");
  const auto g = commute(split, 1);
  REQUIRE(g);
  CHECK(g->to_string() == "L0 R0 L0 R0");
  CHECK_FALSE(commute(*g, 1));
}
