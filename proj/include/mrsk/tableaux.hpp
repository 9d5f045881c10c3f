#pragma once

#include <string>
#include <vector>

#include "mrsk/core.hpp"
#include "mrsk/rsk.hpp"

namespace mrsk {

// Partition shape: weakly decreasing positive row lengths.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> rows);

  const std::vector<int>& rows() const& { return rows_; }
  std::vector<int> rows() && { return std::move(rows_); }
  std::size_t row_count() const { return rows_.size(); }
  long long size() const;
  Shape conjugate() const;

  friend bool operator==(const Shape& a, const Shape& b) = default;

 private:
  std::vector<int> rows_;
};

enum class ShapeOrder { Equal, Below, Above, Incomparable };

// Partial-sum comparison for shapes of equal size.  `Below` means the left
// shape weakly dominates row sums (it is lower in the order used here).
ShapeOrder dominance(const Shape& a, const Shape& b);
inline bool dominance_leq(const Shape& a, const Shape& b) {
  ShapeOrder o = dominance(a, b);
  return o == ShapeOrder::Equal || o == ShapeOrder::Below;
}

// Filling with strictly decreasing rows and weakly decreasing columns.
class InvertedTableau {
 public:
  InvertedTableau() = default;
  explicit InvertedTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const& { return rows_; }
  std::vector<std::vector<int>> rows() && { return std::move(rows_); }
  Shape shape() const;
  bool empty() const { return rows_.empty(); }
  std::vector<int> entry_multiset() const;  // sorted ascending

  friend bool operator==(const InvertedTableau& a, const InvertedTableau& b) = default;

  std::string ascii() const;
  std::string json() const;
  std::string latex() const;

 private:
  std::vector<std::vector<int>> rows_;
};

// Shape of the sub-filling of entries >= r (a prefix of every row).
Shape restrict_geq(const InvertedTableau& y, int r);

// Entry-multiset refinement order: shapes of all upper restrictions compare.
bool tableau_leq(const InvertedTableau& y, const InvertedTableau& z);

struct TableauPair {
  InvertedTableau p;
  InvertedTableau q;

  friend bool operator==(const TableauPair& a, const TableauPair& b) = default;
};

bool pair_leq(const TableauPair& a, const TableauPair& b);

// Row i of p/q lists the begins/ends of the i-th ladder.  Requires a
// consecutively dominant tuple.
TableauPair from_ladder_tuple(const LadderTuple& t);
// Inverse; cells may satisfy p = q + 1 (a dummy cell), never more.
LadderTuple to_ladder_tuple(const TableauPair& pair);

// Scan helper: does the extraction image of the contragredient agree with
// the evacuation route applied to the original pair?  Reported, not asserted.
bool schuetzenberger_relation_check(const Multisegment& m);

}  // namespace mrsk
