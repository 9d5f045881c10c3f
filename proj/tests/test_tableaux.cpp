#include "mrsk/tableaux.hpp"

#include "doctest.h"
#include "mrsk/enumerate.hpp"

using namespace mrsk;

namespace {
Multisegment ms(const std::string& s) { return Multisegment::parse(s); }
Ladder lad(const std::string& s) { return Ladder::from_multisegment(ms(s)); }
}  // namespace

TEST_CASE("shapes") {
  Shape s({4, 3, 1});
  CHECK(s.size() == 8);
  CHECK(s.conjugate() == Shape({3, 2, 2, 1}));
  CHECK(Shape{}.conjugate() == Shape{});
  CHECK_THROWS_AS(Shape({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Shape({1, 0}), std::invalid_argument);
}

TEST_CASE("dominance order on shapes") {
  CHECK(dominance(Shape({2}), Shape({1, 1})) == ShapeOrder::Below);
  CHECK(dominance(Shape({1, 1}), Shape({2})) == ShapeOrder::Above);
  CHECK(dominance(Shape({2, 1}), Shape({1, 1, 1})) == ShapeOrder::Below);
  CHECK(dominance(Shape({2, 2}), Shape({2, 2})) == ShapeOrder::Equal);
  CHECK(dominance(Shape({3, 1, 1, 1}), Shape({2, 2, 2})) == ShapeOrder::Incomparable);
  CHECK_THROWS_AS(dominance(Shape({2}), Shape({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("inverted tableau validity") {
  CHECK_NOTHROW(InvertedTableau({{3, 1}, {2, 1}}));
  CHECK_THROWS_AS(InvertedTableau({{1, 1}}), std::invalid_argument);   // row not strict
  CHECK_THROWS_AS(InvertedTableau({{1}, {2}}), std::invalid_argument); // column grows
  CHECK_THROWS_AS(InvertedTableau({{2}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("ladder tuple to tableau pair") {
  TableauPair pq = from_ladder_tuple({lad("[2,3]"), lad("[1,2]")});
  CHECK(pq.p == InvertedTableau({{2}, {1}}));
  CHECK(pq.q == InvertedTableau({{3}, {2}}));

  TableauPair single = from_ladder_tuple({lad("[3,4]+[1,2]")});
  CHECK(single.p == InvertedTableau({{3, 1}}));
  CHECK(single.q == InvertedTableau({{4, 2}}));

  EnumSpec spec{.lo = 1, .hi = 4, .max_segments = 4, .dummy_budget = 1};
  for (const auto& m : enumerate_multisegments(spec)) {
    if (m.empty()) continue;
    LadderTuple t = rsk(m);
    CHECK(to_ladder_tuple(from_ladder_tuple(t)) == t);
  }

  // the inverse rejects cells beyond the dummy threshold
  using Rows = std::vector<std::vector<int>>;
  CHECK_THROWS_AS(to_ladder_tuple(TableauPair{InvertedTableau(Rows{{4}}),
                                              InvertedTableau(Rows{{2}})}),
                  std::invalid_argument);
}

TEST_CASE("entry multisets of the pair") {
  EnumSpec spec{.lo = 1, .hi = 4, .max_segments = 4};
  for (const auto& m : enumerate_multisegments(spec)) {
    if (m.empty()) continue;
    TableauPair pq = from_ladder_tuple(rsk(m));
    std::vector<int> begins, ends;
    for (const auto& s : m.entries()) {
      begins.push_back(s.begin());
      ends.push_back(s.end());
    }
    std::sort(begins.begin(), begins.end());
    std::sort(ends.begin(), ends.end());
    CHECK(pq.p.entry_multiset() == begins);
    CHECK(pq.q.entry_multiset() == ends);
  }
}

TEST_CASE("upper restriction") {
  InvertedTableau y({{2}, {1}});
  CHECK(restrict_geq(y, 2) == Shape({1}));
  CHECK(restrict_geq(y, 0) == Shape({1, 1}));
  CHECK(restrict_geq(y, 5) == Shape{});
}

TEST_CASE("tableau order") {
  InvertedTableau row({{2, 1}});
  InvertedTableau col({{2}, {1}});
  CHECK(tableau_leq(row, col));
  CHECK(!tableau_leq(col, row));
  CHECK(tableau_leq(row, row));
  CHECK_THROWS_AS(tableau_leq(row, InvertedTableau({{3, 1}})), std::invalid_argument);

  SUBCASE("partial order on all fillings of small multisets") {
    // fillings of {1,2,3} and of {1,2,2,3}
    std::vector<InvertedTableau> a = {
        InvertedTableau({{3, 2, 1}}), InvertedTableau({{3, 2}, {1}}),
        InvertedTableau({{3, 1}, {2}}), InvertedTableau({{3}, {2}, {1}})};
    for (const auto& x : a) {
      CHECK(tableau_leq(x, x));
      for (const auto& y : a)
        for (const auto& z : a) {
          if (tableau_leq(x, y) && tableau_leq(y, x)) CHECK(x == y);
          if (tableau_leq(x, y) && tableau_leq(y, z)) CHECK(tableau_leq(x, z));
        }
    }
  }
}

TEST_CASE("pair order") {
  TableauPair a{InvertedTableau({{2, 1}}), InvertedTableau({{3, 1}})};
  TableauPair b{InvertedTableau({{2}, {1}}), InvertedTableau({{3}, {1}})};
  CHECK(pair_leq(a, b));
  CHECK(!pair_leq(b, a));
}

TEST_CASE("rendering") {
  InvertedTableau y({{3, 1}, {2}});
  CHECK(y.ascii() == "[3][1]\n[2]\n");
  CHECK(y.json() == R"({"rows":[[3,1],[2]],"shape":[2,1]})");
  CHECK(y.latex() == "\\begin{ytableau}\n3 & 1 \\\\\n2\n\\end{ytableau}");
}

TEST_CASE("reflection scan examples") {
  CHECK(schuetzenberger_relation_check(ms("[2,2]")));
  // recorded behaviour of the running example
  CHECK(schuetzenberger_relation_check(ms("[1,3]+[2,2]")));
}
