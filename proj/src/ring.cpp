#include "mrsk/ring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "mrsk/rsk.hpp"

namespace mrsk {

long long Monomial::total_length() const {
  long long n = 0;
  for (const auto& s : factors) n += s.length();
  return n;
}

std::vector<int> Monomial::content() const {
  std::vector<int> out;
  for (const auto& s : factors)
    for (int v = s.begin(); v <= s.end(); ++v) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors.reserve(a.factors.size() + b.factors.size());
  std::merge(a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
             std::back_inserter(out.factors), canonical_less);
  return out;
}

bool operator<(const Monomial& a, const Monomial& b) {
  auto key = [](Segment s) { return std::pair(-s.begin(), -s.end()); };
  return std::lexicographical_compare(
      a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
      [&](Segment x, Segment y) { return key(x) < key(y); });
}

std::string Monomial::str() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << "*";
    os << "z" << factors[i].str();
  }
  return os.str();
}

RingElement RingElement::variable(Segment s) {
  if (s.is_dummy()) throw std::invalid_argument("ring variables are genuine segments");
  Monomial m;
  m.factors.push_back(s);
  return from_monomial(std::move(m));
}

RingElement RingElement::from_monomial(Monomial m) {
  RingElement e;
  e.terms_.emplace(std::move(m), BigInt(1));
  return e;
}

void RingElement::add_term(const Monomial& m, const BigInt& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RingElement& RingElement::operator+=(const RingElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  RingElement out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
  return out;
}

RingElement& RingElement::operator*=(const RingElement& o) {
  *this = *this * o;
  return *this;
}

std::string RingElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coeff = c.str();
    if (first) {
      first = false;
      if (coeff == "1")
        os << m.str();
      else if (coeff == "-1")
        os << "-" << m.str();
      else
        os << coeff << "*" << m.str();
      continue;
    }
    if (coeff[0] == '-') {
      os << " - ";
      coeff = coeff.substr(1);
    } else {
      os << " + ";
    }
    if (coeff == "1")
      os << m.str();
    else
      os << coeff << "*" << m.str();
  }
  return os.str();
}

RingElement ladder_class(const Ladder& l) {
  if (l.has_dummies())
    throw std::invalid_argument("ladder_class: genuine ladders only");
  const auto& segs = l.segments();
  const std::size_t k = segs.size();

  RingElement out;
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  // Permutation sum; desk-scale ladders keep k small.
  std::vector<bool> used(k, false);
  std::vector<std::size_t> pick(k, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int sign) {
    if (i == k) {
      Monomial mono;
      for (std::size_t r = 0; r < k; ++r) {
        const int a = segs[r].begin();
        const int b = segs[pick[r]].end();
        if (b < a - 1) return;          // dead term
        if (b == a - 1) continue;       // unit factor
        mono.factors.push_back(Segment::genuine(a, b));
      }
      std::sort(mono.factors.begin(), mono.factors.end(), canonical_less);
      out.add_term(mono, BigInt(sign));
      return;
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (used[j]) continue;
      // Parity flips once per transposition from the identity prefix.
      int inversions = 0;
      for (std::size_t r = 0; r < i; ++r)
        if (pick[r] > j) ++inversions;
      used[j] = true;
      pick[i] = j;
      rec(i + 1, (inversions % 2) ? -sign : sign);
      used[j] = false;
    }
  };
  rec(0, 1);
  return out;
}

std::vector<Ladder> rsk_standard_factors(const Multisegment& m,
                                         const Multisegment& dummies) {
  if (m.genuine_part().empty() || m.has_dummies())
    throw std::invalid_argument("rsk_standard_factors: nonzero genuine multisegment plus dummies expected");
  for (const auto& s : dummies.entries())
    if (!s.is_dummy())
      throw std::invalid_argument("rsk_standard_factors: second argument must be dummies");

  LadderTuple t = rsk(m + dummies);
  std::vector<Ladder> factors;
  for (auto it = t.rbegin(); it != t.rend(); ++it)
    if (auto g = it->genuine_part()) factors.push_back(*g);
  return factors;
}

RingElement rsk_standard_class(const Multisegment& m, const Multisegment& dummies) {
  RingElement out = RingElement::unit();
  for (const auto& l : rsk_standard_factors(m, dummies)) out *= ladder_class(l);
  return out;
}

BigInt determinant(const std::vector<std::vector<BigInt>>& mat) {
  const std::size_t n = mat.size();
  for (const auto& row : mat)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  if (n == 0) return BigInt(1);
  if (n > 20) throw std::invalid_argument("determinant: block too large");

  // f[S]: determinant of the first |S| rows against column set S.
  std::vector<BigInt> f(std::size_t(1) << n);
  f[0] = BigInt(1);
  for (std::size_t mask = 1; mask < f.size(); ++mask) {
    const int r = __builtin_popcountll(mask) - 1;
    BigInt acc;
    int col_pos = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask >> c & 1)) continue;
      if (!mat[r][c].is_zero()) {
        BigInt term = mat[r][c] * f[mask ^ (std::size_t(1) << c)];
        if ((r + col_pos) % 2)
          acc -= term;
        else
          acc += term;
      }
      ++col_pos;
    }
    f[mask] = std::move(acc);
  }
  return f.back();
}

namespace {

// All multisegments over begins `as` / ends `bs` with the given total size,
// grouped into content blocks.
void enumerate_graded(const std::vector<Segment>& vars, long long total_size,
                      std::size_t from, Multisegment& cur,
                      const std::function<void(const Multisegment&)>& emit) {
  if (total_size == 0) {
    emit(cur);
    return;
  }
  for (std::size_t i = from; i < vars.size(); ++i) {
    if (vars[i].length() > total_size) continue;
    cur.add(vars[i]);
    enumerate_graded(vars, total_size - vars[i].length(), i, cur, emit);
    cur.remove_one(vars[i]);
  }
}

}  // namespace

DrsReport drs_basis_check(const std::vector<int>& as, const std::vector<int>& bs,
                          long long total_size, bool require_saturated) {
  if (require_saturated)
    for (int a : as)
      for (int b : bs)
        if (a > b)
          throw std::invalid_argument("drs_basis_check: endpoint sets not saturated");

  std::vector<Segment> vars;
  for (int a : as)
    for (int b : bs)
      if (a <= b) vars.push_back(Segment::genuine(a, b));
  std::sort(vars.begin(), vars.end(), canonical_less);
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

  std::map<std::vector<int>, std::vector<Multisegment>> blocks;
  Multisegment cur;
  enumerate_graded(vars, total_size, 0, cur, [&](const Multisegment& m) {
    Monomial mono{m.entries()};
    blocks[mono.content()].push_back(m);
  });

  DrsReport report;
  report.total_size = total_size;
  for (auto& [content, members] : blocks) {
    std::sort(members.begin(), members.end());
    // Columns are the monomials, i.e. the same multisegments.
    std::map<Monomial, std::size_t> col;
    for (std::size_t i = 0; i < members.size(); ++i)
      col[Monomial{members[i].entries()}] = i;

    std::vector<std::vector<BigInt>> mat(members.size(),
                                         std::vector<BigInt>(members.size()));
    for (std::size_t r = 0; r < members.size(); ++r) {
      RingElement e = members[r].empty() ? RingElement::unit()
                                         : rsk_standard_class(members[r], {});
      for (const auto& [mono, coeff] : e.terms()) {
        auto it = col.find(mono);
        if (it == col.end())
          throw std::logic_error("drs_basis_check: expansion left the content block");
        mat[r][it->second] = coeff;
      }
    }
    DrsBlockReport block;
    block.content = content;
    block.dimension = members.size();
    block.determinant = determinant(mat);
    block.unimodular = block.determinant.equals(1) || block.determinant.equals(-1);
    report.all_unimodular = report.all_unimodular && block.unimodular;
    report.blocks.push_back(std::move(block));
  }
  return report;
}

}  // namespace mrsk
