#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mrsk/core.hpp"
#include "mrsk/tableaux.hpp"

namespace mrsk {

// Finite word over the integers.
using Word = std::vector<int>;

bool is_row_word(const Word& w);     // weakly increasing
bool is_column_word(const Word& w);  // strictly decreasing

// Straight-shape semistandard tableau: rows weakly increase left to right,
// columns strictly increase downward.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const& { return rows_; }
  std::vector<std::vector<int>> rows() && { return std::move(rows_); }
  bool empty() const { return rows_.empty(); }
  Shape shape() const;
  int min_entry() const;  // throws when empty
  int max_entry() const;

  // Row reading word, bottom row first.
  Word word() const;

  friend bool operator==(const Tableau& a, const Tableau& b) = default;
  std::string ascii() const;

 private:
  std::vector<std::vector<int>> rows_;
};

// Skew semistandard filling; row i starts at column offset(i).
class SkewTableau {
 public:
  SkewTableau() = default;
  SkewTableau(std::vector<int> offsets, std::vector<std::vector<int>> rows);

  const std::vector<int>& offsets() const { return offsets_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Word word() const;

 private:
  std::vector<int> offsets_;
  std::vector<std::vector<int>> rows_;
};

// Schensted insertion tableau of a word.
Tableau p_tableau(const Word& w);

// Whether two words are Knuth equivalent (they share an insertion tableau).
bool knuth_equivalent(const Word& a, const Word& b);

// The antinormal representative of the Knuth class of word(t): the rotated
// diagram of shape(t), filled so that its word rectifies back to t.
SkewTableau antitableau(const Tableau& t);

// Antidiagonal flip of the antitableau: an inverted tableau of conjugate
// shape.  `inv_back` straightens an inverted tableau the same way.
InvertedTableau inv_map(const Tableau& t);
Tableau inv_back(const InvertedTableau& y);

// Evacuation with respect to the alphabet [lo, hi].
Tableau evacuation(const Tableau& t, int lo, int hi);

// Strip bookkeeping.
bool is_horizontal_strip(const Shape& outer, const Shape& inner);
bool is_vertical_strip(const Shape& outer, const Shape& inner);
// Inner shape of the grounded removable vertical strip of size r (one box in
// each of the first r rows); nullopt when no column of height r exists.
std::optional<Shape> grounded_inner(const Shape& outer, int r);

// Unique factorizations through a fixed strip.  The word factor is a row
// word for horizontal strips, a column word for vertical strips.
std::pair<Word, Tableau> left_factor(const Tableau& p, const Shape& inner,
                                     bool vertical);
std::pair<Tableau, Word> right_factor(const Tableau& p, const Shape& inner,
                                      bool vertical);

// Sequence of row words u^(1), u^(2), ... with finitely many nonempty;
// index i is 1-based.
class RowTuple {
 public:
  RowTuple() = default;
  explicit RowTuple(std::vector<Word> words);

  const std::vector<Word>& words() const& { return words_; }
  std::vector<Word> words() && { return std::move(words_); }
  std::size_t max_index() const { return words_.size(); }
  const Word& at(std::size_t index) const;  // 1-based; empty beyond range
  bool empty() const;
  std::size_t total_length() const;
  // Concatenation ... u^(2) u^(1) read as a single word.
  Word concatenation() const;
  int min_value() const;  // throws when empty

  void set(std::size_t index, Word w);

  friend bool operator==(const RowTuple& a, const RowTuple& b) = default;
  std::string str() const;

 private:
  void normalize();
  std::vector<Word> words_;
};

// Value bounds making a tuple the image of a multisegment: plain = values at
// most their index; enhanced allows index + 1.
bool is_flagged(const RowTuple& u);
bool is_flagged_enhanced(const RowTuple& u);

// Multisegment <-> row-tuple translations ([i,j] puts value i into word j;
// a dummy d(a) puts value a+1 into word a).
RowTuple iota(const Multisegment& m);
Multisegment tuple_to_multisegment(const RowTuple& u);

// Column-insertion correspondence and its inverse.
std::pair<Tableau, Tableau> crsk(const RowTuple& u);
RowTuple crsk_inverse(const Tableau& p, const Tableau& q);

// Chain-increment operator: select the rightmost m, then the next m+1 to its
// left, and so on; each selected letter grows by one.
struct ChainIncrement {
  Word word;
  int incremented = 0;
};
ChainIncrement chain_increment(const Word& w, int m);
RowTuple chain_increment(const RowTuple& u, int m);
Tableau chain_increment(const Tableau& t, int m);

struct WordsMwResult {
  RowTuple dagger;
  Segment delta_circ = Segment::genuine(0, 0);
  RowTuple diagonal_removed;  // tuple after the diagonal deletions
  int khat = 0;
  int k = 0;
};

// The truncation step on row tuples: delete the diagonal run m, m+1, ...,
// then chain-increment at m + khat.
WordsMwResult mw_words(const RowTuple& u);

// Effect of the truncation step on the insertion pair, computed without
// touching the tuple itself.  Requires a flagged-tuple image pair.
std::pair<Tableau, Tableau> gl_step(const Tableau& p, const Tableau& q);

// Key tableaux: a tableau whose columns, as sets, shrink left to right.
bool is_key_tableau(const Tableau& t);
std::vector<int> weight(const Tableau& t, std::size_t n = 0);

struct KeyData {
  Tableau left_key;
  Tableau right_key;
  std::vector<int> left_weight;
  std::vector<int> right_weight;
};
// Grounded-strip column factors on every column height; n pads the weights.
KeyData keys(const Tableau& p, std::size_t n = 0);

// One-line permutation (0-based images) of minimal length sorting the
// partition beta+ onto beta.
std::vector<int> sorting_permutation(const std::vector<int>& beta);
int permutation_length(const std::vector<int>& w);
// Prefix-sort comparison of one-line permutations of equal size.
bool bruhat_leq_permutations(const std::vector<int>& u, const std::vector<int>& w);
// Weight comparison inside one rearrangement class; throws when the sorted
// vectors differ.
bool bruhat_leq(std::vector<int> alpha, std::vector<int> beta);

// Right/left key-weight comparison equivalent to flaggedness.
bool key_condition(const RowTuple& u);
// Variant with the left weight shifted one slot up, matching the enhanced
// flagged test.
bool key_condition_enhanced(const RowTuple& u);

}  // namespace mrsk
