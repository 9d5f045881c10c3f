#include "mrsk/words.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace mrsk {

bool is_row_word(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) return false;
  return true;
}

bool is_column_word(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] <= w[i + 1]) return false;
  return true;
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty()) throw std::invalid_argument("tableau: empty row");
    if (i && rows_[i].size() > rows_[i - 1].size())
      throw std::invalid_argument("tableau: row lengths must weakly decrease");
    if (!is_row_word(rows_[i]))
      throw std::invalid_argument("tableau: rows must weakly increase");
    if (i)
      for (std::size_t j = 0; j < rows_[i].size(); ++j)
        if (rows_[i - 1][j] >= rows_[i][j])
          throw std::invalid_argument("tableau: columns must strictly increase");
  }
}

Shape Tableau::shape() const {
  std::vector<int> lens;
  lens.reserve(rows_.size());
  for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
  return Shape(std::move(lens));
}

int Tableau::min_entry() const {
  if (rows_.empty()) throw std::invalid_argument("min_entry of empty tableau");
  int best = rows_[0][0];
  for (const auto& r : rows_) best = std::min(best, r.front());
  return best;
}

int Tableau::max_entry() const {
  if (rows_.empty()) throw std::invalid_argument("max_entry of empty tableau");
  int best = rows_[0][0];
  for (const auto& r : rows_)
    for (int v : r) best = std::max(best, v);
  return best;
}

Word Tableau::word() const {
  Word w;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return w;
}

std::string Tableau::ascii() const {
  if (rows_.empty()) return "(empty)\n";
  std::size_t width = 1;
  for (const auto& r : rows_)
    for (int v : r) width = std::max(width, std::to_string(v).size());
  std::ostringstream os;
  for (const auto& r : rows_) {
    for (int v : r) {
      std::string cell = std::to_string(v);
      os << '[' << std::string(width - cell.size(), ' ') << cell << ']';
    }
    os << '\n';
  }
  return os.str();
}

SkewTableau::SkewTableau(std::vector<int> offsets, std::vector<std::vector<int>> rows)
    : offsets_(std::move(offsets)), rows_(std::move(rows)) {
  if (offsets_.size() != rows_.size())
    throw std::invalid_argument("skew tableau: offset/row mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (offsets_[i] < 0) throw std::invalid_argument("skew tableau: negative offset");
    if (!is_row_word(rows_[i]))
      throw std::invalid_argument("skew tableau: rows must weakly increase");
    if (i) {
      const int outer_prev = offsets_[i - 1] + static_cast<int>(rows_[i - 1].size());
      const int outer_cur = offsets_[i] + static_cast<int>(rows_[i].size());
      if (offsets_[i] > offsets_[i - 1] || outer_cur > outer_prev)
        throw std::invalid_argument("skew tableau: not a skew shape");
      for (int c = offsets_[i]; c < outer_cur; ++c) {
        if (c < offsets_[i - 1] || c >= outer_prev) continue;
        if (rows_[i - 1][c - offsets_[i - 1]] >= rows_[i][c - offsets_[i]])
          throw std::invalid_argument("skew tableau: columns must strictly increase");
      }
    }
  }
}

Word SkewTableau::word() const {
  Word w;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return w;
}

namespace {

using Rows = std::vector<std::vector<int>>;

// Row bumping: x displaces the leftmost strictly larger entry.
std::pair<std::size_t, std::size_t> insert_row(Rows& rows, int x) {
  for (std::size_t i = 0;; ++i) {
    if (i == rows.size()) {
      rows.push_back({x});
      return {i, 0};
    }
    auto& row = rows[i];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return {i, row.size() - 1};
    }
    std::swap(x, *it);
  }
}

// Inverse of insert_row starting from the corner (r, c); returns the letter
// pushed out of the top row.
int reverse_insert_row(Rows& rows, std::size_t r, std::size_t c) {
  if (r >= rows.size() || c + 1 != rows[r].size() ||
      (r + 1 < rows.size() && rows[r + 1].size() > c))
    throw std::invalid_argument("reverse_insert_row: not a removable corner");
  int v = rows[r].back();
  rows[r].pop_back();
  if (rows[r].empty()) rows.erase(rows.begin() + static_cast<long>(r));
  for (std::size_t i = r; i-- > 0;) {
    auto& row = rows[i];
    // rightmost entry strictly below v
    auto it = std::lower_bound(row.begin(), row.end(), v);
    if (it == row.begin()) throw std::logic_error("reverse_insert_row: stuck");
    --it;
    std::swap(v, *it);
  }
  return v;
}

// Column bumping: x displaces the topmost weakly larger entry of column 0,
// the displaced entry moves one column right, and so on.
std::pair<std::size_t, std::size_t> insert_col(Rows& rows, int x) {
  for (std::size_t j = 0;; ++j) {
    std::size_t height = 0;
    while (height < rows.size() && rows[height].size() > j) ++height;
    std::size_t hit = height;
    for (std::size_t i = 0; i < height; ++i)
      if (rows[i][j] >= x) {
        hit = i;
        break;
      }
    if (hit == height) {
      if (height == rows.size()) rows.push_back({});
      rows[height].push_back(x);
      if (rows[height].size() != j + 1)
        throw std::logic_error("insert_col: landed outside the shape");
      return {height, j};
    }
    std::swap(x, rows[hit][j]);
  }
}

// Inverse of insert_col starting from the corner (r, c).
int reverse_insert_col(Rows& rows, std::size_t r, std::size_t c) {
  if (r >= rows.size() || c + 1 != rows[r].size() ||
      (r + 1 < rows.size() && rows[r + 1].size() > c))
    throw std::invalid_argument("reverse_insert_col: not a removable corner");
  int v = rows[r].back();
  rows[r].pop_back();
  if (rows[r].empty()) rows.erase(rows.begin() + static_cast<long>(r));
  for (std::size_t j = c; j-- > 0;) {
    // bottommost entry weakly below v in column j
    std::size_t height = 0;
    while (height < rows.size() && rows[height].size() > j) ++height;
    std::size_t hit = height;
    for (std::size_t i = height; i-- > 0;)
      if (rows[i][j] <= v) {
        hit = i;
        break;
      }
    if (hit == height) throw std::logic_error("reverse_insert_col: stuck");
    std::swap(v, rows[hit][j]);
  }
  return v;
}

Rows rows_of(const Tableau& t) { return t.rows(); }

}  // namespace

Tableau p_tableau(const Word& w) {
  Rows rows;
  for (int x : w) insert_row(rows, x);
  return Tableau(std::move(rows));
}

bool knuth_equivalent(const Word& a, const Word& b) {
  return p_tableau(a) == p_tableau(b);
}

SkewTableau antitableau(const Tableau& t) {
  if (t.empty()) return {};
  Word w = t.word();
  std::reverse(w.begin(), w.end());
  for (int& v : w) v = -v;
  Tableau negated = p_tableau(w);
  if (!(negated.shape() == t.shape()))
    throw std::logic_error("antitableau: conjugated shape mismatch");

  const std::vector<int> lam = t.shape().rows();
  const int width = lam[0];
  const std::size_t k = lam.size();
  std::vector<int> offsets(k);
  Rows rows(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& src = negated.rows()[k - 1 - i];
    offsets[i] = width - static_cast<int>(src.size());
    rows[i].assign(src.rbegin(), src.rend());
    for (int& v : rows[i]) v = -v;
  }
  return SkewTableau(std::move(offsets), std::move(rows));
}

namespace {

// Antidiagonal reflection of a cell grid.
std::map<std::pair<int, int>, int> flip_cells(const std::map<std::pair<int, int>, int>& cells) {
  int max_row = 0, max_col = 0;
  for (const auto& [rc, v] : cells) {
    max_row = std::max(max_row, rc.first);
    max_col = std::max(max_col, rc.second);
  }
  std::map<std::pair<int, int>, int> out;
  for (const auto& [rc, v] : cells)
    out[{max_col - rc.second, max_row - rc.first}] = v;
  return out;
}

std::map<std::pair<int, int>, int> cells_of_skew(const SkewTableau& s) {
  std::map<std::pair<int, int>, int> cells;
  for (std::size_t i = 0; i < s.rows().size(); ++i)
    for (std::size_t j = 0; j < s.rows()[i].size(); ++j)
      cells[{static_cast<int>(i), s.offsets()[i] + static_cast<int>(j)}] = s.rows()[i][j];
  return cells;
}

}  // namespace

InvertedTableau inv_map(const Tableau& t) {
  if (t.empty()) return {};
  auto cells = flip_cells(cells_of_skew(antitableau(t)));
  std::map<int, std::vector<std::pair<int, int>>> by_row;
  for (const auto& [rc, v] : cells) by_row[rc.first].push_back({rc.second, v});
  Rows rows;
  int expect = 0;
  for (auto& [r, cols] : by_row) {
    if (r != expect++) throw std::logic_error("inv_map: rows not contiguous");
    std::sort(cols.begin(), cols.end());
    std::vector<int> row;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].first != static_cast<int>(j))
        throw std::logic_error("inv_map: row not left-justified");
      row.push_back(cols[j].second);
    }
    rows.push_back(std::move(row));
  }
  return InvertedTableau(std::move(rows));
}

Tableau inv_back(const InvertedTableau& y) {
  if (y.empty()) return {};
  std::map<std::pair<int, int>, int> cells;
  for (std::size_t i = 0; i < y.rows().size(); ++i)
    for (std::size_t j = 0; j < y.rows()[i].size(); ++j)
      cells[{static_cast<int>(i), static_cast<int>(j)}] = y.rows()[i][j];
  auto flipped = flip_cells(cells);

  std::map<int, std::vector<std::pair<int, int>>> by_row;
  for (const auto& [rc, v] : flipped) by_row[rc.first].push_back({rc.second, v});
  std::vector<int> offsets;
  Rows rows;
  for (auto& [r, cols] : by_row) {
    std::sort(cols.begin(), cols.end());
    offsets.push_back(cols[0].first);
    std::vector<int> row;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].first != cols[0].first + static_cast<int>(j))
        throw std::logic_error("inv_back: row has gaps");
      row.push_back(cols[j].second);
    }
    rows.push_back(std::move(row));
  }
  SkewTableau anti(std::move(offsets), std::move(rows));
  return p_tableau(anti.word());
}

Tableau evacuation(const Tableau& t, int lo, int hi) {
  Word w = t.word();
  std::reverse(w.begin(), w.end());
  for (int& v : w) v = lo + hi - v;
  return p_tableau(w);
}

bool is_horizontal_strip(const Shape& outer, const Shape& inner) {
  const auto& lam = outer.rows();
  const auto& mu = inner.rows();
  if (mu.size() > lam.size()) return false;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    const int in = i < mu.size() ? mu[i] : 0;
    if (in > lam[i]) return false;
    if (i + 1 < lam.size() && in < lam[i + 1]) return false;  // two cells in a column
  }
  return true;
}

bool is_vertical_strip(const Shape& outer, const Shape& inner) {
  const auto& lam = outer.rows();
  const auto& mu = inner.rows();
  if (mu.size() > lam.size()) return false;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    const int in = i < mu.size() ? mu[i] : 0;
    if (in > lam[i] || lam[i] - in > 1) return false;
  }
  return true;
}

std::optional<Shape> grounded_inner(const Shape& outer, int r) {
  if (r == 0) return outer;
  const auto& lam = outer.rows();
  if (static_cast<std::size_t>(r) > lam.size()) return std::nullopt;
  // needs a column of height exactly r
  const int below = static_cast<std::size_t>(r) < lam.size() ? lam[r] : 0;
  if (lam[r - 1] == below) return std::nullopt;
  std::vector<int> mu(lam);
  for (int i = 0; i < r; ++i) --mu[i];
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  return Shape(std::move(mu));
}

namespace {

struct Cell {
  std::size_t row;
  std::size_t col;
};

// Cells of outer/inner; validated elsewhere.
std::vector<Cell> strip_cells(const Shape& outer, const Shape& inner) {
  std::vector<Cell> cells;
  const auto& lam = outer.rows();
  const auto& mu = inner.rows();
  for (std::size_t i = 0; i < lam.size(); ++i) {
    const int in = i < mu.size() ? mu[i] : 0;
    for (int j = in; j < lam[i]; ++j)
      cells.push_back({i, static_cast<std::size_t>(j)});
  }
  return cells;
}

void check_strip(const Tableau& p, const Shape& inner, bool vertical, std::size_t* out_size) {
  const Shape outer = p.shape();
  const bool ok = vertical ? is_vertical_strip(outer, inner) : is_horizontal_strip(outer, inner);
  if (!ok)
    throw std::invalid_argument("factorization strip is not removable in the requested direction");
  *out_size = static_cast<std::size_t>(outer.size() - inner.size());
}

}  // namespace

std::pair<Word, Tableau> left_factor(const Tableau& p, const Shape& inner, bool vertical) {
  std::size_t r = 0;
  check_strip(p, inner, vertical, &r);
  auto cells = strip_cells(p.shape(), inner);
  if (vertical)
    std::sort(cells.begin(), cells.end(), [](Cell a, Cell b) { return a.row > b.row; });
  else
    std::sort(cells.begin(), cells.end(), [](Cell a, Cell b) { return a.col > b.col; });

  Rows rows = rows_of(p);
  Word u;
  for (const Cell& c : cells) u.push_back(reverse_insert_col(rows, c.row, c.col));
  if (vertical ? !is_column_word(u) : !is_row_word(u))
    throw std::invalid_argument("left_factor: extraction is not a factor word");
  Tableau t = rows.empty() ? Tableau{} : Tableau(std::move(rows));
  if (!(t.shape() == inner) && !(inner.rows().empty() && t.empty()))
    throw std::logic_error("left_factor: wrong residual shape");
  return {std::move(u), std::move(t)};
}

std::pair<Tableau, Word> right_factor(const Tableau& p, const Shape& inner, bool vertical) {
  std::size_t r = 0;
  check_strip(p, inner, vertical, &r);
  auto cells = strip_cells(p.shape(), inner);
  if (vertical)
    std::sort(cells.begin(), cells.end(), [](Cell a, Cell b) { return a.row > b.row; });
  else
    std::sort(cells.begin(), cells.end(), [](Cell a, Cell b) { return a.col > b.col; });

  Rows rows = rows_of(p);
  Word u;
  for (const Cell& c : cells) u.push_back(reverse_insert_row(rows, c.row, c.col));
  std::reverse(u.begin(), u.end());
  if (vertical ? !is_column_word(u) : !is_row_word(u))
    throw std::invalid_argument("right_factor: extraction is not a factor word");
  Tableau t = rows.empty() ? Tableau{} : Tableau(std::move(rows));
  if (!(t.shape() == inner) && !(inner.rows().empty() && t.empty()))
    throw std::logic_error("right_factor: wrong residual shape");
  return {std::move(t), std::move(u)};
}

RowTuple::RowTuple(std::vector<Word> words) : words_(std::move(words)) {
  for (const auto& w : words_) {
    if (!is_row_word(w)) throw std::invalid_argument("row tuple: words must weakly increase");
    for (int v : w)
      if (v < 1) throw std::invalid_argument("row tuple: values must be positive");
  }
  normalize();
}

void RowTuple::normalize() {
  while (!words_.empty() && words_.back().empty()) words_.pop_back();
}

const Word& RowTuple::at(std::size_t index) const {
  static const Word kEmpty;
  if (index == 0) throw std::invalid_argument("row tuple indices are 1-based");
  if (index > words_.size()) return kEmpty;
  return words_[index - 1];
}

bool RowTuple::empty() const { return words_.empty(); }

std::size_t RowTuple::total_length() const {
  std::size_t n = 0;
  for (const auto& w : words_) n += w.size();
  return n;
}

Word RowTuple::concatenation() const {
  Word w;
  for (auto it = words_.rbegin(); it != words_.rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return w;
}

int RowTuple::min_value() const {
  bool seen = false;
  int best = 0;
  for (const auto& w : words_)
    for (int v : w) {
      if (!seen || v < best) best = v;
      seen = true;
    }
  if (!seen) throw std::invalid_argument("min_value of empty tuple");
  return best;
}

void RowTuple::set(std::size_t index, Word w) {
  if (index == 0) throw std::invalid_argument("row tuple indices are 1-based");
  if (!is_row_word(w)) throw std::invalid_argument("row tuple: words must weakly increase");
  if (index > words_.size()) words_.resize(index);
  words_[index - 1] = std::move(w);
  normalize();
}

std::string RowTuple::str() const {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (std::size_t i = words_.size(); i-- > 0;) {
    if (!first) os << ",";
    first = false;
    if (words_[i].empty()) {
      os << "-";
      continue;
    }
    for (int v : words_[i]) os << v;
  }
  os << ")";
  return os.str();
}

bool is_flagged(const RowTuple& u) {
  for (std::size_t i = 1; i <= u.max_index(); ++i)
    for (int v : u.at(i))
      if (v > static_cast<int>(i)) return false;
  return true;
}

bool is_flagged_enhanced(const RowTuple& u) {
  for (std::size_t i = 1; i <= u.max_index(); ++i)
    for (int v : u.at(i))
      if (v > static_cast<int>(i) + 1) return false;
  return true;
}

RowTuple iota(const Multisegment& m) {
  std::vector<Word> words;
  auto put = [&](std::size_t index, int value) {
    if (index < 1) throw std::invalid_argument("iota: indices must be positive");
    if (index > words.size()) words.resize(index);
    words[index - 1].push_back(value);
  };
  for (const auto& s : m.entries()) {
    if (s.begin() < 1 || s.end() < 1)
      throw std::invalid_argument("iota: entries must lie in the positive integers");
    put(static_cast<std::size_t>(s.end()), s.begin());
  }
  for (auto& w : words) std::sort(w.begin(), w.end());
  return RowTuple(std::move(words));
}

Multisegment tuple_to_multisegment(const RowTuple& u) {
  std::vector<Segment> segs;
  for (std::size_t j = 1; j <= u.max_index(); ++j)
    for (int v : u.at(j)) {
      if (v > static_cast<int>(j) + 1)
        throw std::invalid_argument("tuple_to_multisegment: value exceeds enhanced bound");
      segs.push_back(Segment::from_endpoints(v, static_cast<int>(j)));
    }
  return Multisegment(std::move(segs));
}

std::pair<Tableau, Tableau> crsk(const RowTuple& u) {
  Rows prows, qrows;
  for (std::size_t j = 1; j <= u.max_index(); ++j) {
    if (u.at(j).empty()) continue;
    Word w = u.at(j);
    Tableau prev = prows.empty() ? Tableau{} : Tableau(prows);
    Word combined = w;
    Word pv = prev.word();
    combined.insert(combined.end(), pv.begin(), pv.end());
    Tableau next = p_tableau(combined);
    // record the added horizontal strip with j
    Rows newrows = next.rows();
    for (std::size_t i = 0; i < newrows.size(); ++i) {
      const std::size_t old_len = i < prows.size() ? prows[i].size() : 0;
      if (i >= qrows.size()) qrows.push_back({});
      for (std::size_t c = old_len; c < newrows[i].size(); ++c)
        qrows[i].push_back(static_cast<int>(j));
    }
    prows = std::move(newrows);
  }
  Tableau p = prows.empty() ? Tableau{} : Tableau(std::move(prows));
  Tableau q = qrows.empty() ? Tableau{} : Tableau(std::move(qrows));
  if (!(p.shape() == q.shape())) throw std::logic_error("crsk: shape mismatch");
  return {std::move(p), std::move(q)};
}

RowTuple crsk_inverse(const Tableau& p, const Tableau& q) {
  if (!(p.shape() == q.shape()))
    throw std::invalid_argument("crsk_inverse: shapes differ");
  RowTuple out;
  if (p.empty()) return out;

  Tableau cur = p;
  Rows qrows = q.rows();
  const int maxj = q.max_entry();
  if (q.min_entry() < 1)
    throw std::invalid_argument("crsk_inverse: recording entries must be positive");
  for (int j = maxj; j >= 1; --j) {
    // cells of q equal to j must be row suffixes forming a horizontal strip
    std::vector<int> inner_lens;
    bool any = false;
    for (std::size_t i = 0; i < qrows.size(); ++i) {
      std::size_t len = qrows[i].size();
      std::size_t keep = len;
      while (keep > 0 && qrows[i][keep - 1] == j) --keep;
      for (std::size_t c = 0; c < keep; ++c)
        if (qrows[i][c] == j)
          throw std::invalid_argument("crsk_inverse: recording value not a row suffix");
      if (keep < len) any = true;
      inner_lens.push_back(static_cast<int>(keep));
    }
    if (!any) continue;
    while (!inner_lens.empty() && inner_lens.back() == 0) inner_lens.pop_back();
    Shape inner{inner_lens};
    if (!is_horizontal_strip(cur.shape(), inner))
      throw std::invalid_argument("crsk_inverse: recording strip is not horizontal");
    auto [u, rest] = left_factor(cur, inner, /*vertical=*/false);
    out.set(static_cast<std::size_t>(j), u);
    cur = rest;
    Rows trimmed;
    for (auto& row : qrows) {
      std::size_t keep = row.size();
      while (keep > 0 && row[keep - 1] == j) --keep;
      row.resize(keep);
      if (!row.empty()) trimmed.push_back(row);
    }
    qrows = std::move(trimmed);
  }
  if (!cur.empty() || !qrows.empty())
    throw std::invalid_argument("crsk_inverse: leftover cells");
  return out;
}

ChainIncrement chain_increment(const Word& w, int m) {
  ChainIncrement out{w, 0};
  int target = m;
  for (std::size_t pos = out.word.size(); pos-- > 0;) {
    if (out.word[pos] == target) {
      ++out.word[pos];
      ++out.incremented;
      ++target;
    }
  }
  return out;
}

RowTuple chain_increment(const RowTuple& u, int m) {
  // Operate on the concatenation while remembering word boundaries.
  std::vector<Word> words(u.words());
  std::vector<std::pair<std::size_t, std::size_t>> where;  // (word idx, pos)
  Word concat;
  for (std::size_t i = words.size(); i-- > 0;)
    for (std::size_t pos = 0; pos < words[i].size(); ++pos) {
      where.push_back({i, pos});
      concat.push_back(words[i][pos]);
    }
  ChainIncrement inc = chain_increment(concat, m);
  for (std::size_t t = 0; t < concat.size(); ++t)
    words[where[t].first][where[t].second] = inc.word[t];
  return RowTuple(std::move(words));
}

Tableau chain_increment(const Tableau& t, int m) {
  ChainIncrement inc = chain_increment(t.word(), m);
  Rows rows(t.rows().size());
  std::size_t pos = 0;
  for (std::size_t i = t.rows().size(); i-- > 0;) {
    rows[i].assign(inc.word.begin() + static_cast<long>(pos),
                   inc.word.begin() + static_cast<long>(pos + t.rows()[i].size()));
    pos += t.rows()[i].size();
  }
  return Tableau(std::move(rows));
}

WordsMwResult mw_words(const RowTuple& u) {
  if (u.empty()) throw std::invalid_argument("mw_words: empty tuple");
  WordsMwResult res;
  const int m = u.min_value();

  int khat = 0;
  while (true) {
    const Word& w = u.at(static_cast<std::size_t>(m + khat));
    if (!std::binary_search(w.begin(), w.end(), m + khat)) break;
    ++khat;
  }
  res.khat = khat;

  std::vector<Word> words(u.words());
  for (int j = 0; j < khat; ++j) {
    Word& w = words[static_cast<std::size_t>(m + j) - 1];
    auto it = std::lower_bound(w.begin(), w.end(), m + j);
    w.erase(it);
  }
  res.diagonal_removed = RowTuple(words);

  RowTuple before = res.diagonal_removed;
  // Count increments through the word form.
  ChainIncrement counted = chain_increment(before.concatenation(), m + khat);
  res.dagger = chain_increment(before, m + khat);
  res.k = khat + counted.incremented;
  res.delta_circ = Segment::genuine(m, m + res.k - 1);
  return res;
}

std::pair<Tableau, Tableau> gl_step(const Tableau& p, const Tableau& q) {
  if (p.empty() || q.empty()) throw std::invalid_argument("gl_step: empty pair");
  if (!(p.shape() == q.shape())) throw std::invalid_argument("gl_step: shape mismatch");
  const int m = p.min_entry();

  std::set<int> first_col;
  for (const auto& row : q.rows()) first_col.insert(row[0]);
  int khat = 0;
  while (first_col.count(m + khat)) ++khat;
  for (int i = 0; i < khat; ++i)
    if (q.rows()[static_cast<std::size_t>(i)][0] != m + i)
      throw std::invalid_argument("gl_step: diagonal run is not the top of the first column");

  Tableau qdag;
  if (khat == 0) {
    qdag = q;
  } else {
    std::vector<int> offsets;
    Rows rows;
    for (std::size_t i = 0; i < q.rows().size(); ++i) {
      const bool cut = i < static_cast<std::size_t>(khat);
      std::vector<int> row(q.rows()[i].begin() + (cut ? 1 : 0), q.rows()[i].end());
      if (row.empty()) continue;
      offsets.push_back(cut ? 1 : 0);
      rows.push_back(std::move(row));
    }
    qdag = rows.empty() ? Tableau{} : p_tableau(SkewTableau(offsets, rows).word());
  }

  if (!is_vertical_strip(p.shape(), qdag.empty() ? Shape{} : qdag.shape()))
    throw std::logic_error("gl_step: removed shape is not a vertical strip");

  auto [t, c] = right_factor(p, qdag.empty() ? Shape{} : qdag.shape(), /*vertical=*/true);
  Word expected;
  for (int v = m + khat - 1; v >= m; --v) expected.push_back(v);
  if (c != expected)
    throw std::logic_error("gl_step: column factor disagrees with the recording run");

  Tableau pdag = t.empty() ? Tableau{} : chain_increment(t, m + khat);
  return {std::move(pdag), std::move(qdag)};
}

bool is_key_tableau(const Tableau& t) {
  const auto cols = t.shape().conjugate().rows();
  std::vector<std::set<int>> colsets(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < cols[j]; ++i) colsets[j].insert(t.rows()[i][j]);
  for (std::size_t j = 0; j + 1 < colsets.size(); ++j)
    if (!std::includes(colsets[j].begin(), colsets[j].end(), colsets[j + 1].begin(),
                       colsets[j + 1].end()))
      return false;
  return true;
}

std::vector<int> weight(const Tableau& t, std::size_t n) {
  std::size_t bound = n;
  if (!t.empty()) {
    if (t.min_entry() < 1)
      throw std::invalid_argument("weight: entries must be positive");
    bound = std::max<std::size_t>(bound, static_cast<std::size_t>(t.max_entry()));
  }
  std::vector<int> wt(bound, 0);
  for (const auto& row : t.rows())
    for (int v : row) ++wt[static_cast<std::size_t>(v) - 1];
  return wt;
}

KeyData keys(const Tableau& p, std::size_t n) {
  KeyData out;
  if (p.empty()) {
    out.left_weight.assign(n, 0);
    out.right_weight.assign(n, 0);
    return out;
  }
  const Shape lam = p.shape();
  const auto heights = lam.conjugate().rows();

  std::map<int, std::vector<int>> left_cols, right_cols;  // height -> sorted column
  for (int r : heights) {
    if (left_cols.count(r)) continue;
    auto inner = grounded_inner(lam, r);
    if (!inner) throw std::logic_error("keys: missing grounded strip for a column height");
    auto [lu, lt] = left_factor(p, *inner, /*vertical=*/true);
    auto [rt, ru] = right_factor(p, *inner, /*vertical=*/true);
    std::vector<int> lcol(lu.rbegin(), lu.rend());
    std::vector<int> rcol(ru.rbegin(), ru.rend());
    left_cols[r] = std::move(lcol);
    right_cols[r] = std::move(rcol);
  }

  // Taller (further left) columns must contain the shorter ones as sets.
  auto check_nesting = [](const std::map<int, std::vector<int>>& cols) {
    const std::vector<int>* wider = nullptr;
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
      if (wider && !std::includes(wider->begin(), wider->end(), it->second.begin(),
                                  it->second.end()))
        throw std::logic_error("keys: column factors fail to nest");
      wider = &it->second;
    }
  };
  check_nesting(left_cols);
  check_nesting(right_cols);

  auto build = [&](std::map<int, std::vector<int>>& cols) {
    Rows rows;
    rows.assign(static_cast<std::size_t>(heights[0]), {});
    for (int h : heights) {
      const auto& col = cols[h];
      for (int i = 0; i < h; ++i) rows[static_cast<std::size_t>(i)].push_back(col[static_cast<std::size_t>(i)]);
    }
    Tableau key(std::move(rows));
    if (!is_key_tableau(key)) throw std::logic_error("keys: result is not a key tableau");
    return key;
  };
  out.left_key = build(left_cols);
  out.right_key = build(right_cols);
  const std::size_t bound =
      std::max<std::size_t>(n, static_cast<std::size_t>(std::max(out.left_key.max_entry(),
                                                                 out.right_key.max_entry())));
  out.left_weight = weight(out.left_key, bound);
  out.right_weight = weight(out.right_key, bound);
  return out;
}

std::vector<int> sorting_permutation(const std::vector<int>& beta) {
  std::vector<int> plus = beta;
  std::sort(plus.rbegin(), plus.rend());
  std::vector<bool> used(beta.size(), false);
  std::vector<int> w(beta.size(), 0);
  for (std::size_t i = 0; i < plus.size(); ++i) {
    std::size_t j = 0;
    while (j < beta.size() && (used[j] || beta[j] != plus[i])) ++j;
    if (j == beta.size()) throw std::logic_error("sorting_permutation: mismatch");
    used[j] = true;
    w[i] = static_cast<int>(j);
  }
  return w;
}

int permutation_length(const std::vector<int>& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

bool bruhat_leq_permutations(const std::vector<int>& u, const std::vector<int>& w) {
  if (u.size() != w.size())
    throw std::invalid_argument("bruhat_leq_permutations: size mismatch");
  std::vector<int> pu, pw;
  for (std::size_t k = 0; k < u.size(); ++k) {
    pu.insert(std::upper_bound(pu.begin(), pu.end(), u[k]), u[k]);
    pw.insert(std::upper_bound(pw.begin(), pw.end(), w[k]), w[k]);
    for (std::size_t i = 0; i <= k; ++i)
      if (pu[i] > pw[i]) return false;
  }
  return true;
}

bool bruhat_leq(std::vector<int> alpha, std::vector<int> beta) {
  const std::size_t n = std::max(alpha.size(), beta.size());
  alpha.resize(n, 0);
  beta.resize(n, 0);
  std::vector<int> sa = alpha, sb = beta;
  std::sort(sa.rbegin(), sa.rend());
  std::sort(sb.rbegin(), sb.rend());
  if (sa != sb)
    throw std::invalid_argument("bruhat_leq: weights lie in different orbits");
  return bruhat_leq_permutations(sorting_permutation(alpha), sorting_permutation(beta));
}

bool key_condition(const RowTuple& u) {
  if (u.empty()) return true;
  auto [p, q] = crsk(u);
  const std::size_t n = static_cast<std::size_t>(std::max(p.max_entry(), q.max_entry()));
  KeyData kp = keys(p, n);
  KeyData kq = keys(q, n);
  return bruhat_leq(kp.right_weight, kq.left_weight);
}

bool key_condition_enhanced(const RowTuple& u) {
  if (u.empty()) return true;
  auto [p, q] = crsk(u);
  const std::size_t n = static_cast<std::size_t>(std::max(p.max_entry(), q.max_entry()));
  KeyData kp = keys(p, n);
  KeyData kq = keys(q, n);
  std::vector<int> beta = kq.left_weight;
  beta.insert(beta.begin(), 0);
  return bruhat_leq(kp.right_weight, beta);
}

}  // namespace mrsk
