#include "mrsk/tableaux.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace mrsk {

Shape::Shape(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) throw std::invalid_argument("shape rows must be positive");
    if (i && rows_[i] > rows_[i - 1])
      throw std::invalid_argument("shape rows must weakly decrease");
  }
}

long long Shape::size() const {
  long long n = 0;
  for (int r : rows_) n += r;
  return n;
}

Shape Shape::conjugate() const {
  if (rows_.empty()) return {};
  std::vector<int> cols(rows_[0], 0);
  for (int r : rows_)
    for (int j = 0; j < r; ++j) ++cols[j];
  return Shape(std::move(cols));
}

ShapeOrder dominance(const Shape& a, const Shape& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dominance compares shapes of equal size");
  if (a == b) return ShapeOrder::Equal;

  auto leq = [](const Shape& x, const Shape& y) {
    // x below y: fewer rows and partial sums of x dominate.
    if (x.row_count() > y.row_count()) return false;
    long long sx = 0, sy = 0;
    for (std::size_t j = 0; j < x.row_count(); ++j) {
      sx += x.rows()[j];
      sy += y.rows()[j];
      if (sx < sy) return false;
    }
    return true;
  };
  const bool ab = leq(a, b), ba = leq(b, a);
  if (ab && ba) throw std::logic_error("dominance: distinct shapes compare both ways");
  if (ab) return ShapeOrder::Below;
  if (ba) return ShapeOrder::Above;
  return ShapeOrder::Incomparable;
}

InvertedTableau::InvertedTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty()) throw std::invalid_argument("inverted tableau: empty row");
    if (i && rows_[i].size() > rows_[i - 1].size())
      throw std::invalid_argument("inverted tableau: row lengths must weakly decrease");
    for (std::size_t j = 0; j + 1 < rows_[i].size(); ++j)
      if (rows_[i][j] <= rows_[i][j + 1])
        throw std::invalid_argument("inverted tableau: rows must strictly decrease");
    if (i)
      for (std::size_t j = 0; j < rows_[i].size(); ++j)
        if (rows_[i - 1][j] < rows_[i][j])
          throw std::invalid_argument("inverted tableau: columns must weakly decrease");
  }
}

Shape InvertedTableau::shape() const {
  std::vector<int> lens;
  lens.reserve(rows_.size());
  for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
  return Shape(std::move(lens));
}

std::vector<int> InvertedTableau::entry_multiset() const {
  std::vector<int> all;
  for (const auto& r : rows_) all.insert(all.end(), r.begin(), r.end());
  std::sort(all.begin(), all.end());
  return all;
}

std::string InvertedTableau::ascii() const {
  if (rows_.empty()) return "(empty)\n";
  std::size_t w = 1;
  for (const auto& r : rows_)
    for (int v : r) w = std::max(w, std::to_string(v).size());
  std::ostringstream os;
  for (const auto& r : rows_) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      std::string cell = std::to_string(r[j]);
      os << '[' << std::string(w - cell.size(), ' ') << cell << ']';
    }
    os << '\n';
  }
  return os.str();
}

std::string InvertedTableau::json() const {
  nlohmann::json j;
  j["shape"] = shape().rows();
  j["rows"] = rows_;
  return j.dump();
}

std::string InvertedTableau::latex() const {
  std::ostringstream os;
  os << "\\begin{ytableau}\n";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) os << " & ";
      os << rows_[i][j];
    }
    os << (i + 1 < rows_.size() ? " \\\\\n" : "\n");
  }
  os << "\\end{ytableau}";
  return os.str();
}

Shape restrict_geq(const InvertedTableau& y, int r) {
  std::vector<std::vector<int>> kept;
  for (const auto& row : y.rows()) {
    std::size_t len = 0;
    while (len < row.size() && row[len] >= r) ++len;
    if (len) kept.push_back(std::vector<int>(row.begin(), row.begin() + len));
  }
  // The sub-filling must itself be an inverted tableau.
  InvertedTableau check(kept);
  std::vector<int> lens;
  for (const auto& row : kept) lens.push_back(static_cast<int>(row.size()));
  return Shape(std::move(lens));
}

bool tableau_leq(const InvertedTableau& y, const InvertedTableau& z) {
  if (y.entry_multiset() != z.entry_multiset())
    throw std::invalid_argument("tableau_leq compares equal entry multisets");
  // Shapes of upper restrictions are step functions of r; the values at the
  // distinct entries decide the whole sweep.
  std::set<int> cuts;
  for (int v : y.entry_multiset()) cuts.insert(v);
  for (int r : cuts)
    if (!dominance_leq(restrict_geq(y, r), restrict_geq(z, r))) return false;
  return true;
}

bool pair_leq(const TableauPair& a, const TableauPair& b) {
  return tableau_leq(a.p, b.p) && tableau_leq(a.q, b.q);
}

TableauPair from_ladder_tuple(const LadderTuple& t) {
  if (!is_dominant_tuple(t))
    throw std::invalid_argument("from_ladder_tuple: tuple lacks consecutive dominance");
  std::vector<std::vector<int>> prows, qrows;
  for (const auto& l : t) {
    std::vector<int> pr, qr;
    for (const auto& s : l.segments()) {
      pr.push_back(s.begin());
      qr.push_back(s.end());
    }
    prows.push_back(std::move(pr));
    qrows.push_back(std::move(qr));
  }
  return TableauPair{InvertedTableau(std::move(prows)), InvertedTableau(std::move(qrows))};
}

LadderTuple to_ladder_tuple(const TableauPair& pair) {
  if (!(pair.p.shape() == pair.q.shape()))
    throw std::invalid_argument("to_ladder_tuple: shapes differ");
  LadderTuple t;
  for (std::size_t i = 0; i < pair.p.rows().size(); ++i) {
    const auto& pr = pair.p.rows()[i];
    const auto& qr = pair.q.rows()[i];
    std::vector<Segment> chain;
    for (std::size_t j = 0; j < pr.size(); ++j) {
      if (pr[j] > qr[j] + 1)
        throw std::invalid_argument("to_ladder_tuple: cell below dummy threshold");
      chain.push_back(Segment::from_endpoints(pr[j], qr[j]));
    }
    t.push_back(Ladder(std::move(chain)));
  }
  if (!is_dominant_tuple(t))
    throw std::invalid_argument("to_ladder_tuple: rows do not form a dominant tuple");
  return t;
}

}  // namespace mrsk
