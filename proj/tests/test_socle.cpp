#include "mrsk/socle.hpp"

#include "doctest.h"
#include "mrsk/enumerate.hpp"
#include "mrsk/mw.hpp"
#include "mrsk/ring.hpp"

using namespace mrsk;

namespace {
Multisegment ms(const std::string& s) { return Multisegment::parse(s); }
Ladder lad(const std::string& s) { return Ladder::from_multisegment(ms(s)); }
}  // namespace

TEST_CASE("socle recursion") {
  CHECK(socle(ms("[1,2]"), lad("[2,3]")) == ms("[1,3]+[2,2]"));
  CHECK(socle(ms("0"), lad("[3,4]")) == ms("[3,4]"));
  CHECK(socle(ms("[2,2]"), lad("[2,3]")) == ms("[2,2]+[2,3]"));
  CHECK(socle(ms("[1,1]"), lad("[2,2]")) == ms("[1,2]"));
  CHECK(socle(ms("[1,2]"), ms("0")) == ms("[1,2]"));
}

TEST_CASE("step inversion") {
  CHECK(invert_mw_step(ms("[2,3]+[2,2]"), Segment::genuine(1, 1)) == ms("[1,3]+[2,2]"));
  CHECK(invert_mw_step(ms("0"), Segment::genuine(2, 4)) == ms("[2,2]+[3,3]+[4,4]"));

  EnumSpec spec{.lo = 1, .hi = 4, .max_segments = 4};
  for (const auto& m : enumerate_multisegments(spec)) {
    if (m.empty()) continue;
    MwStepResult s = mw_step(m);
    CHECK(invert_mw_step(s.dagger, s.delta_circ) == m);
  }
}

TEST_CASE("left-sided socle") {
  CHECK(socle_left(lad("[1,2]"), ms("0")) == ms("[1,2]"));
  CHECK(socle_left(lad("[2,3]"), ms("[1,2]")) == socle(ms("[2,3]"), lad("[1,2]")));

  EnumSpec spec{.lo = 1, .hi = 3, .max_segments = 2};
  auto ladders = enumerate_ladders(1, 3);
  for (const auto& l : ladders)
    for (const auto& m : enumerate_multisegments(spec))
      CHECK(socle_left(l, m) ==
            socle(m.contragredient(), l.contragredient()).contragredient());
}

TEST_CASE("socle chains") {
  CHECK(socle_chain({lad("[2,3]"), lad("[1,2]")}) == ms("[1,3]+[2,2]"));
  CHECK(socle_chain({lad("[3,4]+[1,2]")}) == ms("[3,4]+[1,2]"));

  EnumSpec spec{.lo = 1, .hi = 3, .max_segments = 3, .dummy_budget = 1};
  for (const auto& m : enumerate_multisegments(spec)) {
    if (m.genuine_part().empty()) continue;
    CHECK(socle_chain(rsk(m)) == m.genuine_part());
  }
}

TEST_CASE("product factor orders") {
  auto z = zeta_factors(ms("[1,3]+[2,2]"));
  CHECK(z == std::vector<Segment>{Segment::genuine(2, 2), Segment::genuine(1, 3)});
  auto l = lambda_factors(ms("[1,3]+[2,2]"));
  CHECK(l == std::vector<Segment>{Segment::genuine(1, 3), Segment::genuine(2, 2)});

  EnumSpec spec{.lo = 1, .hi = 4, .max_segments = 4};
  for (const auto& m : enumerate_multisegments(spec)) {
    auto f = zeta_factors(m);
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) CHECK(!precedes(f[i], f[j]));
  }
}

TEST_CASE("extraction factors with dummies") {
  CHECK(rsk_standard_factors(ms("[1,2]"), ms("0")) == std::vector<Ladder>{lad("[1,2]")});
  CHECK(rsk_standard_factors(ms("[1,2]"), ms("d(1)")) ==
        std::vector<Ladder>{lad("[1,1]"), lad("[2,2]")});

  // factor multiset equals the singleton expansions of the involution
  Multisegment inv = mw_involution(ms("[1,2]"));
  CHECK(inv == ms("[1,1]+[2,2]"));

  CHECK_THROWS_AS(rsk_standard_factors(ms("0"), ms("0")), std::invalid_argument);
  CHECK_THROWS_AS(rsk_standard_factors(ms("[1,2]"), ms("[1,1]")), std::invalid_argument);
}

TEST_CASE("interpolation classification") {
  CHECK(interpolation_check(ms("[1,2]"), ms("d(1)")).cls ==
        InterpolationClass::LanglandsMatch);
  CHECK(interpolation_check(ms("[1,2]"), ms("0")).cls ==
        InterpolationClass::ZelevinskyMatch);

  InterpolationReport neither = interpolation_check(ms("[1,2]+[2,3]"), ms("d(2)"));
  CHECK(!neither.mismatch);

  EnumSpec gspec{.lo = 1, .hi = 3, .max_segments = 3};
  EnumSpec dspec{.lo = 1, .hi = 3, .max_segments = 0, .dummy_budget = 2};
  auto dummies = enumerate_multisegments(dspec);
  for (const auto& m : enumerate_multisegments(gspec)) {
    if (m.empty()) continue;
    for (const auto& d : dummies) CHECK(!interpolation_check(m, d).mismatch);
  }
}

TEST_CASE("case-two postcondition holds along the recursion") {
  // one step back from the recursion: truncating the socle output reproduces
  // the inner socle and the removed segment
  EnumSpec spec{.lo = 1, .hi = 3, .max_segments = 3};
  auto ladders = enumerate_ladders(1, 3);
  for (const auto& l : ladders) {
    for (const auto& m : enumerate_multisegments(spec)) {
      if (m.empty()) continue;
      if (l.segments().back().begin() <= m.min_begin()) continue;
      Multisegment out = socle(m, l);
      MwStepResult outer = mw_step(out);
      MwStepResult inner = mw_step(m);
      CHECK(outer.delta_circ == inner.delta_circ);
      CHECK(outer.dagger == socle(inner.dagger, l));
    }
  }
}
