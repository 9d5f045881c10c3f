#include "mrsk/mw.hpp"

#include <map>

#include "doctest.h"
#include "mrsk/enumerate.hpp"
#include "mrsk/oracles.hpp"
#include "test_util.hpp"

using namespace mrsk;

namespace {
Multisegment ms(const std::string& s) { return Multisegment::parse(s); }
}  // namespace

TEST_CASE("leading chain") {
  auto values = [](const Multisegment& m) {
    std::vector<Segment> out;
    for (auto i : leading_indices(m)) out.push_back(m.entries()[i]);
    return out;
  };
  CHECK(values(ms("[1,1]+[2,2]+[2,2]+[3,3]")) ==
        std::vector<Segment>{Segment::genuine(1, 1), Segment::genuine(2, 2),
                             Segment::genuine(3, 3)});
  CHECK(values(ms("[1,3]+[2,2]")) == std::vector<Segment>{Segment::genuine(1, 3)});
  CHECK(values(ms("[1,1]")) == std::vector<Segment>{Segment::genuine(1, 1)});
  CHECK_THROWS_AS(leading_indices(ms("0")), std::invalid_argument);
  CHECK_THROWS_AS(leading_indices(ms("d(1)")), std::invalid_argument);

  // exhaustive chain search agrees with the greedy selection
  EnumSpec spec{.lo = 1, .hi = 3, .max_segments = 3};
  for (const auto& m : enumerate_multisegments(spec)) {
    if (m.empty()) continue;
    CHECK(values(m) == oracles::leading_chain_values(m));
  }
}

TEST_CASE("one step") {
  MwStepResult r = mw_step(ms("[1,3]+[2,2]"));
  CHECK(r.dagger == ms("[2,3]+[2,2]"));
  CHECK(r.delta_circ == Segment::genuine(1, 1));

  r = mw_step(ms("[1,1]+[2,2]+[2,2]+[3,3]"));
  CHECK(r.dagger == ms("[2,2]"));
  CHECK(r.delta_circ == Segment::genuine(1, 3));

  r = mw_step(ms("[5,5]"));
  CHECK(r.dagger == ms("0"));
  CHECK(r.delta_circ == Segment::genuine(5, 5));

  CHECK_THROWS_AS(mw_step(ms("0")), std::invalid_argument);
  CHECK_THROWS_AS(mw_step(ms("[1,2]+d(1)")), std::invalid_argument);
}

TEST_CASE("involution") {
  CHECK(mw_involution(ms("[2,5]")) == ms("[2,2]+[3,3]+[4,4]+[5,5]"));
  CHECK(mw_involution(ms("[1,3]+[2,2]")) == ms("[1,1]+[2,2]+[2,2]+[3,3]"));
  CHECK(mw_involution(ms("0")) == ms("0"));

  EnumSpec spec{.lo = 1, .hi = 3, .max_segments = 4};
  for (const auto& m : enumerate_multisegments(spec))
    CHECK(mw_involution(mw_involution(m)) == m);
}

TEST_CASE("enhanced step") {
  MwStepResult r = mw_step_enhanced(ms("[1,1]+[2,2]"));
  CHECK(r.dagger == ms("d(1)+d(2)"));
  CHECK(r.delta_circ == Segment::genuine(1, 2));

  r = mw_step_enhanced(ms("d(1)+[2,2]"));
  CHECK(r.dagger == ms("d(1)+d(2)"));
  CHECK(r.delta_circ == Segment::genuine(2, 2));

  CHECK_THROWS_AS(mw_step_enhanced(ms("d(1)")), std::invalid_argument);

  EnumSpec spec{.lo = 1, .hi = 4, .max_segments = 4};
  for (const auto& m : enumerate_multisegments(spec)) {
    if (m.empty()) continue;
    MwStepResult a = mw_step_enhanced(m);
    MwStepResult b = mw_step(m);
    CHECK(a.dagger.genuine_part() == b.dagger);
    CHECK(a.delta_circ == b.delta_circ);
  }
}

TEST_CASE("dual step") {
  MwStepResult r = mw_step_dual(ms("[2,5]"));
  CHECK(r.dagger == ms("[2,4]"));
  CHECK(r.delta_circ == Segment::genuine(5, 5));

  r = mw_step_dual(ms("[1,1]"));
  CHECK(r.dagger == ms("0"));
  CHECK(r.delta_circ == Segment::genuine(1, 1));

  testutil::Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    Multisegment m = testutil::random_multisegment(rng, -2, 3, 4);
    if (m.empty()) continue;
    MwStepResult dual = mw_step_dual(m);
    MwStepResult conj = mw_step(m.contragredient());
    CHECK(dual.delta_circ == conj.delta_circ.contragredient());
    CHECK(dual.dagger == conj.dagger.contragredient());
  }
}

TEST_CASE("nondegeneracy") {
  CHECK(is_nondegenerate(ms("[1,2]+[2,3]")));
  CHECK(!is_nondegenerate(ms("[1,1]+[1,2]")));
  CHECK(!is_nondegenerate(ms("[2,2]")));
  CHECK_THROWS_AS(is_nondegenerate(ms("0")), std::invalid_argument);
}

TEST_CASE("step injectivity on a window") {
  EnumSpec spec{.lo = 1, .hi = 3, .max_segments = 3};
  std::map<std::string, Multisegment> seen;
  for (const auto& m : enumerate_multisegments(spec)) {
    if (m.empty()) continue;
    MwStepResult r = mw_step(m);
    const std::string key = r.dagger.str() + "|" + r.delta_circ.str();
    auto [it, fresh] = seen.emplace(key, m);
    CHECK(fresh);
  }
}

TEST_CASE("ladder preservation") {
  EnumSpec spec{.lo = 1, .hi = 4, .max_segments = 3};
  for (const auto& m : enumerate_multisegments(spec)) {
    if (m.empty() || !is_ladder(m.entries())) continue;
    CHECK(is_ladder(mw_involution(m).entries()));
  }
}
