#include "mrsk/suites.hpp"

#include "doctest.h"
#include "mrsk/enumerate.hpp"

using namespace mrsk;

TEST_CASE("enumeration counts") {
  EnumSpec one{.lo = 1, .hi = 2, .max_segments = 1};
  auto ms1 = enumerate_multisegments(one);
  CHECK(ms1.size() == 4);  // 0, [1,1], [1,2], [2,2]

  EnumSpec two{.lo = 1, .hi = 2, .max_segments = 2};
  CHECK(enumeration_count(two) == 10);

  EnumSpec dummy{.lo = 1, .hi = 1, .max_segments = 1, .dummy_budget = 1};
  // {0, [1,1]} x {no dummy, d(1)}
  CHECK(enumeration_count(dummy) == 4);

  EnumSpec sized{.lo = 1, .hi = 3, .max_segments = 2, .max_size = 2};
  for (const auto& m : enumerate_multisegments(sized))
    CHECK(m.total_length() <= 2);
}

TEST_CASE("enumeration budget") {
  EnumSpec spec{.lo = 1, .hi = 4, .max_segments = 5};
  spec.cap = 10;
  CHECK_THROWS_AS(enumerate_multisegments(spec), std::invalid_argument);
}

TEST_CASE("ladder enumeration") {
  auto ladders = enumerate_ladders(1, 2);
  // [1,1],[1,2],[2,2],[2,2]+[1,1]
  CHECK(ladders.size() == 4);
}

TEST_CASE("row tuple enumeration") {
  long long n = 0;
  for_each_row_tuple(2, 2, 2, [&](const RowTuple&) { ++n; });
  // cells: (1,1),(1,2),(2,1),(2,2); multisets of size 1 or 2: 4 + 10
  CHECK(n == 14);

  // sharded enumeration covers the same set exactly once
  long long sharded = 0;
  for (std::size_t s = 0; s < row_tuple_shards(2, 2); ++s)
    for_each_row_tuple_shard(2, 2, 2, s, [&](const RowTuple&) { ++sharded; });
  CHECK(sharded == n);
}

TEST_CASE("suite registry") {
  CHECK(!suite_catalog().empty());
  EnumSpec spec{.lo = 1, .hi = 2, .max_segments = 2};
  CHECK_THROWS_AS(run_suite("no-such-suite", spec), std::invalid_argument);

  SuiteReport rep = run_suite("mw-involution", spec);
  CHECK(rep.passed());
  CHECK(rep.instances == 10);

  SuiteReport golden = run_suite("golden", spec);
  CHECK(golden.passed());
}

TEST_CASE("parallel runs match serial runs") {
  EnumSpec spec{.lo = 1, .hi = 3, .max_segments = 3};
  SuiteReport serial = run_suite("k-bijection", spec, 1);
  SuiteReport parallel = run_suite("k-bijection", spec, 4);
  CHECK(serial.passed());
  CHECK(serial.instances == parallel.instances);
  CHECK(serial.failure_count == parallel.failure_count);
  CHECK(serial.tallies == parallel.tallies);

  SuiteReport scan1 = run_suite("conj-left-chain", spec, 1);
  SuiteReport scan2 = run_suite("conj-left-chain", spec, 3);
  CHECK(scan1.tallies == scan2.tallies);
  CHECK(!scan1.assertion_suite);
}

TEST_CASE("assertion suites pass at small scale") {
  EnumSpec spec{.lo = 1, .hi = 3, .max_segments = 3};
  for (const std::string name :
       {"mw-involution", "mw-step-injectivity", "mw-properties", "k-bijection",
        "k-bijection-pairs", "commutation", "rsk-properties", "permissibility-oracle",
        "saturated-image", "socle-main", "socle-pairs"}) {
    SuiteReport rep = run_suite(name, spec, 1);
    INFO(rep.summary());
    CHECK(rep.passed());
  }
  EnumSpec enhanced{.lo = 1, .hi = 3, .max_segments = 2, .dummy_budget = 1};
  for (const std::string name :
       {"mw-involution", "k-bijection", "commutation-enhanced", "rsk-properties",
        "socle-enhanced", "interpolation", "oracle-rsk"}) {
    SuiteReport rep = run_suite(name, enhanced, 1);
    INFO(rep.summary());
    CHECK(rep.passed());
  }
  EnumSpec words{.lo = 1, .hi = 3, .max_segments = 4};
  for (const std::string name : {"key-characterization", "gl-step"}) {
    SuiteReport rep = run_suite(name, words, 1);
    INFO(rep.summary());
    CHECK(rep.passed());
  }
}

TEST_CASE("report serialization") {
  EnumSpec spec{.lo = 1, .hi = 2, .max_segments = 2};
  SuiteReport rep = run_suite("mw-involution", spec);
  CHECK(rep.json().find("\"suite\":\"mw-involution\"") != std::string::npos);
  CHECK(rep.summary().find("mw-involution") != std::string::npos);
}
