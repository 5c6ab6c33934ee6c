#include "doctest.h"
#include "netclosure/error.hpp"
#include "netclosure/fixtures.hpp"
#include "netclosure/system.hpp"
#include "support.hpp"

using namespace netclosure;
using testing::set;
using testing::text;

TEST_CASE("builder keeps declaration order and is idempotent") {
  System::Builder b;
  const auto x = b.add_node("x");
  const auto y = b.add_node("y");
  CHECK(b.add_node("x") == x);
  b.add_edge("x", "y").add_arc("y", "z");
  const auto s = b.build();
  REQUIRE(s.size() == 3);
  CHECK(s.label(x) == "x");
  CHECK(s.label(y) == "y");
  CHECK(s.at("z").index == 2);
  CHECK(s.has_symmetric_edge(x, y));
  CHECK(s.has_arc(y, s.at("z")));
  CHECK_FALSE(s.has_arc(s.at("z"), y));
  CHECK(s.adjacent_either(s.at("z"), y));
  CHECK(s.arc_count() == 3);
  CHECK(s.symmetric_edges().size() == 1);
}

TEST_CASE("self loops and bad labels are rejected") {
  System::Builder b;
  CHECK_THROWS_AS(b.add_edge("a", "a"), ParseError);
  CHECK_THROWS_AS(b.add_node(""), ParseError);
  CHECK_THROWS_AS(b.add_node("a,b"), ParseError);
  CHECK_THROWS_AS(b.add_node("#x"), ParseError);
  CHECK_THROWS_AS(b.add_node("--"), ParseError);
  CHECK_THROWS_AS(b.add_node("two words"), ParseError);
  CHECK(valid_label("x'"));
  CHECK(valid_label("node_1"));
}

TEST_CASE("unknown labels name themselves") {
  const auto s = fixtures::c4();
  try {
    s.at("q");
    FAIL("expected UsageError");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("'q'") != std::string::npos);
  }
}

TEST_CASE("node set algebra") {
  const auto s = fixtures::f1();
  const auto ab = set(s, "a,b");
  const auto bc = set(s, "b,c");
  CHECK(text(s, ab | bc) == "{a,b,c}");
  CHECK(text(s, ab & bc) == "{b}");
  CHECK(text(s, ab - bc) == "{a}");
  CHECK((ab & bc).is_subset_of(ab));
  CHECK(ab.intersects(bc));
  CHECK_FALSE(set(s, "a").intersects(set(s, "i")));
  CHECK(s.empty_set().empty());
  CHECK(s.full_set().size() == 9);
  CHECK(text(s, s.from_mask(0b101)) == "{a,c}");
  CHECK(ab.first()->index == 0);
}

TEST_CASE("canonical order: cardinality, then lexicographic") {
  const auto s = fixtures::c4();
  CHECK(canonical_less(set(s, "d"), set(s, "a,b")));
  CHECK(canonical_less(set(s, "a,c"), set(s, "b,c")));
  CHECK(canonical_less(set(s, "a,d"), set(s, "b,c")));
  CHECK_FALSE(canonical_less(set(s, "b"), set(s, "a")));
  CHECK(canonical_less(s.empty_set(), set(s, "a")));
}

TEST_CASE("sets from different systems do not mix") {
  const auto a = fixtures::c4();
  const auto b = fixtures::c4();
  CHECK_THROWS_AS(a.singleton(NodeId{0}) | b.singleton(NodeId{0}), UsageError);
  CHECK_THROWS_AS(a.check(b.empty_set()), UsageError);
  const auto copy = a;
  CHECK_NOTHROW(copy.check(a.full_set()));
  CHECK(a.same_structure(b));
}

TEST_CASE("derived systems") {
  const auto s = fixtures::c4();
  const auto a = s.at("a"), b = s.at("b");
  const auto cut = s.without_arcs({{a, b}, {b, a}});
  CHECK_FALSE(cut.adjacent_either(a, b));
  CHECK(cut.arc_count() == 6);
  CHECK(cut.with_arcs({{a, b}, {b, a}}).same_structure(s));

  const auto minus = s.without_node(b);
  CHECK(minus.labels() == std::vector<std::string>{"a", "c", "d"});
  CHECK(minus.has_symmetric_edge(minus.at("c"), minus.at("d")));
  CHECK(minus.arc_count() == 4);

  const auto ind = s.induced(set(s, "a,c,d"));
  CHECK(ind.same_structure(minus));
}
