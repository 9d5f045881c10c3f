#include "mrsk/core.hpp"

#include <vector>

#include "doctest.h"
#include "mrsk/enumerate.hpp"
#include "test_util.hpp"

using namespace mrsk;

TEST_CASE("segment construction and accessors") {
  Segment s = Segment::genuine(1, 3);
  CHECK(s.begin() == 1);
  CHECK(s.end() == 3);
  CHECK(s.length() == 3);
  CHECK(!s.is_dummy());

  Segment d = Segment::dummy(1);
  CHECK(d.begin() == 2);
  CHECK(d.end() == 1);
  CHECK(d.length() == 0);
  CHECK(d.is_dummy());
  CHECK(d.str() == "d(1)");

  CHECK_THROWS_AS(Segment::genuine(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(Segment::from_endpoints(2, 0), std::invalid_argument);
  CHECK(Segment::from_endpoints(2, 1) == Segment::dummy(1));
}

TEST_CASE("shift and truncation") {
  Segment s = Segment::genuine(2, 4);
  CHECK(s.shift_left() == Segment::genuine(1, 3));
  CHECK(*s.behead() == Segment::genuine(3, 4));
  CHECK(!Segment::genuine(2, 2).behead().has_value());
  CHECK_THROWS_AS(Segment::dummy(0).behead(), std::invalid_argument);
  // dummies shift like their coordinates
  CHECK(Segment::dummy(3).shift_left() == Segment::dummy(2));
}

TEST_CASE("precedes relation") {
  CHECK(precedes(Segment::genuine(1, 2), Segment::genuine(2, 3)));
  CHECK(!precedes(Segment::genuine(1, 3), Segment::genuine(2, 2)));
  CHECK(!precedes(Segment::dummy(1), Segment::genuine(1, 2)));
  CHECK(!precedes(Segment::genuine(1, 2), Segment::dummy(1)));
  // d(1) = (2,1) and d(2) = (3,2)
  CHECK(precedes(Segment::dummy(1), Segment::dummy(2)));
}

TEST_CASE("precedes is a strict partial order on a window") {
  std::vector<Segment> all;
  for (int a = 1; a <= 3; ++a) {
    for (int b = a; b <= 3; ++b) all.push_back(Segment::genuine(a, b));
    all.push_back(Segment::dummy(a));
  }
  for (const auto& x : all) CHECK(!precedes(x, x));
  for (const auto& x : all)
    for (const auto& y : all)
      for (const auto& z : all)
        if (precedes(x, y) && precedes(y, z)) CHECK(precedes(x, z));
  // any two segments compare by precedes or containment
  for (const auto& x : all)
    for (const auto& y : all)
      CHECK((precedes(x, y) || precedes(y, x) || contained(x, y) || contained(y, x)));
}

TEST_CASE("containment") {
  CHECK(contained(Segment::genuine(2, 2), Segment::genuine(1, 3)));
  CHECK(!contained(Segment::genuine(1, 3), Segment::genuine(2, 2)));
  CHECK(contained(Segment::dummy(1), Segment::genuine(1, 2)));
}

TEST_CASE("contragredient") {
  Multisegment m = Multisegment::parse("[1,3]+[2,2]");
  CHECK(m.contragredient() == Multisegment::parse("[-3,-1]+[-2,-2]"));
  CHECK(Multisegment{}.contragredient() == Multisegment{});
  CHECK(Segment::dummy(1).contragredient() == Segment::dummy(-2));

  testutil::Rng rng(42);
  for (int i = 0; i < 500; ++i) {
    Multisegment r = testutil::random_multisegment(rng, -3, 4, 5, true);
    CHECK(r.contragredient().contragredient() == r);
  }
}

TEST_CASE("parse and format") {
  CHECK(Multisegment::parse("[1,3]+[2,2]").str() == "[2,2]+[1,3]");
  CHECK(Multisegment::parse("d(1)+[1,2]").str() == "d(1)+[1,2]");
  CHECK(Multisegment::parse("0").str() == "0");
  CHECK(Multisegment::parse(" [ 1 , 2 ] + [1,2] ").count() == 2);
  CHECK_THROWS_AS(Multisegment::parse("[2,0]"), std::invalid_argument);
  CHECK_THROWS_AS(Multisegment::parse("[1,2"), std::invalid_argument);
  CHECK_THROWS_AS(Multisegment::parse("[1,2]+"), std::invalid_argument);
  CHECK_THROWS_AS(Multisegment::parse("x"), std::invalid_argument);

  // round trip across the enumeration
  EnumSpec spec{.lo = 1, .hi = 3, .max_segments = 2, .dummy_budget = 1};
  for (const auto& m : enumerate_multisegments(spec)) {
    CHECK(Multisegment::parse(m.str()) == m);
    CHECK(Multisegment::from_json(m.json()) == m);
  }
}

TEST_CASE("json shape") {
  Multisegment m = Multisegment::parse("[1,3]+d(2)+[2,2]");
  CHECK(m.json() == R"({"dummies":[2],"segments":[[2,2],[1,3]]})");
}

TEST_CASE("multiset algebra") {
  Multisegment a = Multisegment::parse("[1,2]");
  Multisegment b = Multisegment::parse("[1,2]+[2,3]");
  CHECK((a + b) == (b + a));
  CHECK((a + b).total_length() == a.total_length() + b.total_length());
  CHECK((b - a) == Multisegment::parse("[2,3]"));
  CHECK_THROWS_AS(a - b, std::invalid_argument);

  Multisegment e = Multisegment::parse("[1,2]+d(1)+d(1)");
  CHECK(e.total_length() == 2);
  CHECK(e.genuine_part() == a);
  CHECK(e.dummy_multiplicity(1) == 2);
  CHECK(e.dummy_multiplicity(2) == 0);
  CHECK(e.dummy_support() == std::vector<int>{1});
  CHECK(e.min_begin() == 1);
  CHECK(e.max_end() == 2);
  CHECK_THROWS_AS(Multisegment::parse("d(1)").min_begin(), std::invalid_argument);
}

TEST_CASE("ladders") {
  CHECK(Ladder::from_multisegment(Multisegment::parse("[2,3]+[1,2]")).size() == 2);
  CHECK_THROWS_AS(Ladder::from_multisegment(Multisegment::parse("[1,3]+[2,2]")),
                  std::invalid_argument);
  Ladder l({Segment::genuine(2, 3), Segment::dummy(0)});
  CHECK(l.has_dummies());
  CHECK(l.genuine_part()->size() == 1);
  CHECK(!Ladder({Segment::dummy(1)}).genuine_part().has_value());
  CHECK(l.contragredient().segments() ==
        std::vector<Segment>{Segment::dummy(-1), Segment::genuine(-3, -2)});
  // d(1) does not follow [2,3]: the begins tie
  CHECK_THROWS_AS(Ladder({Segment::genuine(2, 3), Segment::dummy(1)}),
                  std::invalid_argument);
}
