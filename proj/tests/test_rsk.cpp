#include "mrsk/rsk.hpp"

#include "doctest.h"
#include "mrsk/enumerate.hpp"
#include "mrsk/oracles.hpp"
#include "mrsk/tableaux.hpp"

using namespace mrsk;

namespace {
Multisegment ms(const std::string& s) { return Multisegment::parse(s); }
Ladder lad(const std::string& s) { return Ladder::from_multisegment(ms(s)); }
}  // namespace

TEST_CASE("depth table") {
  {
    DepthTable t = depth_table(ms("[1,3]+[2,2]"));
    CHECK(t.depth == std::vector<int>{0, 0});
    CHECK(t.max_depth == 0);
    // containment enumeration puts [1,3] before [2,2]
    const auto& m = ms("[1,3]+[2,2]");
    CHECK(m.entries()[t.fibers[0][0]] == Segment::genuine(1, 3));
    CHECK(m.entries()[t.fibers[0][1]] == Segment::genuine(2, 2));
  }
  {
    Multisegment m = ms("[1,1]+[2,2]");
    DepthTable t = depth_table(m);
    // canonical order stores [2,2] first
    CHECK(m.entries()[0] == Segment::genuine(2, 2));
    CHECK(t.depth == std::vector<int>{0, 1});
  }
  {
    Multisegment m = ms("[1,2]+d(1)");
    DepthTable t = depth_table(m);
    CHECK(t.depth == std::vector<int>{0, 0});
    CHECK(t.max_genuine_depth == 0);
  }
  CHECK_THROWS_AS(depth_table(ms("0")), std::invalid_argument);
}

TEST_CASE("extraction step") {
  {
    KStep s = k_step(ms("[1,3]+[2,2]"));
    CHECK(s.ladder == lad("[2,3]"));
    CHECK(s.derived == ms("[1,2]"));
  }
  {
    KStep s = k_step(ms("[1,2]+d(1)"));
    CHECK(s.ladder == lad("[2,2]"));
    CHECK(s.derived == ms("[1,1]"));
  }
  {
    KStep s = k_step(ms("[1,1]+[1,1]+[1,1]"));
    CHECK(s.ladder == lad("[1,1]"));
    CHECK(s.derived == ms("[1,1]+[1,1]"));
  }
}

TEST_CASE("full recursion") {
  CHECK(tuple_str(rsk(ms("[1,3]+[2,2]"))) == "([2,3]; [1,2])");
  CHECK(rsk(ms("0")).empty());

  // enhanced trace with one dummy
  LadderTuple t = rsk(ms("[1,2]+d(1)"));
  REQUIRE(t.size() == 2);
  CHECK(t[0] == lad("[2,2]"));
  CHECK(t[1] == lad("[1,1]"));
}

TEST_CASE("dominance") {
  CHECK(is_dominant(lad("[2,3]"), lad("[1,2]")));
  CHECK(is_dominant(lad("[1,2]"), lad("[1,2]")));
  CHECK(!is_dominant(lad("[1,2]"), lad("[2,3]+[1,2]")));  // too short
}

TEST_CASE("permissibility") {
  CHECK(is_permissible(lad("[2,3]"), lad("[1,2]")));
  CHECK(!is_permissible_pair(lad("[3,3]+[1,2]"), ms("[1,3]+[2,2]")));
  CHECK(is_permissible_pair(lad("[2,3]"), ms("[1,2]")));
  CHECK(is_permissible_pair(lad("[2,3]"), ms("0")));

  // maximal-chain evaluation matches the all-chains evaluation
  EnumSpec spec{.lo = 1, .hi = 3, .max_segments = 3};
  auto ladders = enumerate_ladders(1, 3);
  for (const auto& l : ladders)
    for (const auto& m : enumerate_multisegments(spec))
      CHECK(is_permissible_pair(l, m) == is_permissible_pair_exhaustive(l, m));
}

TEST_CASE("inverse step") {
  CHECK(k_inverse(lad("[2,3]"), ms("[1,2]")) == ms("[1,3]+[2,2]"));
  CHECK(k_inverse(lad("[3,4]"), ms("0")) == ms("[3,4]"));
  CHECK_THROWS_AS(k_inverse(lad("[3,3]+[1,2]"), ms("[1,3]+[2,2]")),
                  std::invalid_argument);

  EnumSpec spec{.lo = 1, .hi = 4, .max_segments = 4};
  for (const auto& m : enumerate_multisegments(spec)) {
    if (m.empty()) continue;
    KStep s = k_step(m);
    CHECK(k_inverse(s.ladder, s.derived) == m);
  }
}

TEST_CASE("image membership") {
  LadderTuple bad{lad("[3,3]+[1,2]"), lad("[2,3]"), lad("[1,2]")};
  CHECK(!in_image(bad));
  CHECK(in_image({lad("[2,3]"), lad("[1,2]")}));
  CHECK(in_image({lad("[3,4]+[1,2]")}));
  CHECK_THROWS_AS(in_image({lad("[1,2]"), lad("[2,3]")}), std::invalid_argument);

  EnumSpec spec{.lo = 1, .hi = 3, .max_segments = 4};
  for (const auto& m : enumerate_multisegments(spec)) {
    if (m.empty()) continue;
    auto rebuilt = rsk_inverse(rsk(m));
    REQUIRE(rebuilt.has_value());
    CHECK(*rebuilt == m);
  }
}

TEST_CASE("width") {
  CHECK(width(ms("[1,3]+[2,2]")) == 2);
  CHECK(width(ms("[3,4]+[1,2]")) == 1);
  CHECK(width(ms("[1,1]+[1,1]+[1,1]")) == 3);
  CHECK(width(ms("0")) == 0);

  EnumSpec spec{.lo = 1, .hi = 4, .max_segments = 4};
  for (const auto& m : enumerate_multisegments(spec))
    CHECK(width(m) == static_cast<int>(rsk(m).size()));
}

TEST_CASE("bumping oracle agreement") {
  EnumSpec spec{.lo = 1, .hi = 4, .max_segments = 4, .dummy_budget = 1};
  for (const auto& m : enumerate_multisegments(spec)) {
    if (m.empty()) continue;
    CHECK(from_ladder_tuple(rsk(m)) == oracles::rsk_by_insertion(m));
  }
}

TEST_CASE("image lies among permissible tuples") {
  EnumSpec spec{.lo = 1, .hi = 3, .max_segments = 4};
  for (const auto& m : enumerate_multisegments(spec)) {
    if (m.empty()) continue;
    CHECK(is_permissible_tuple(rsk(m)));
  }
  // with dummies only consecutive dominance survives
  EnumSpec espec{.lo = 1, .hi = 3, .max_segments = 3, .dummy_budget = 1};
  for (const auto& m : enumerate_multisegments(espec)) {
    if (m.empty()) continue;
    CHECK(is_dominant_tuple(rsk(m)));
  }
}
