#include "mrsk/rsk.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mrsk {

DepthTable depth_table(std::span<const Segment> segs) {
  const std::size_t n = segs.size();
  DepthTable t;
  t.depth.assign(n, -1);

  // Longest <<-increasing chain from each index, memoized over the DAG.
  std::function<int(std::size_t)> solve = [&](std::size_t i) -> int {
    if (t.depth[i] >= 0) return t.depth[i];
    int best = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (precedes(segs[i], segs[j])) best = std::max(best, 1 + solve(j));
    return t.depth[i] = best;
  };
  for (std::size_t i = 0; i < n; ++i) solve(i);

  for (std::size_t i = 0; i < n; ++i) {
    t.max_depth = std::max(t.max_depth, t.depth[i]);
    if (!segs[i].is_dummy()) t.max_genuine_depth = std::max(t.max_genuine_depth, t.depth[i]);
  }

  t.fibers.assign(t.max_depth + 1, {});
  for (std::size_t i = 0; i < n; ++i) t.fibers[t.depth[i]].push_back(i);
  for (auto& fiber : t.fibers) {
    // Weakly shrinking: begin ascending, end descending, position stable.
    std::stable_sort(fiber.begin(), fiber.end(), [&](std::size_t a, std::size_t b) {
      if (segs[a].begin() != segs[b].begin()) return segs[a].begin() < segs[b].begin();
      return segs[a].end() > segs[b].end();
    });
    for (std::size_t r = 0; r + 1 < fiber.size(); ++r)
      if (!contained(segs[fiber[r + 1]], segs[fiber[r]]))
        throw std::logic_error("fiber enumeration is not a containment chain");
  }

  t.sigma.assign(n, 0);
  t.distinguished.assign(n, false);
  for (const auto& fiber : t.fibers) {
    for (std::size_t r = 0; r < fiber.size(); ++r) {
      t.sigma[fiber[r]] = fiber[(r + 1) % fiber.size()];
      t.distinguished[fiber[r]] =
          r + 1 == fiber.size() || !(segs[fiber[r + 1]] == segs[fiber[r]]);
    }
  }
  return t;
}

KStep k_step(const Multisegment& m) {
  if (m.empty()) throw std::invalid_argument("k_step: zero multisegment");
  const auto& segs = m.entries();
  DepthTable t = depth_table(segs);

  KStep out{Ladder::single(segs[0]), {}, {}, {}};
  out.transformed.reserve(segs.size());
  for (std::size_t i = 0; i < segs.size(); ++i)
    out.transformed.push_back(
        Segment::from_endpoints(segs[i].begin(), segs[t.sigma[i]].end()));

  std::vector<bool> in_ladder(segs.size(), false);
  std::vector<Segment> chain;
  for (int k = 0; k <= t.max_depth; ++k) {
    const std::size_t j = t.fiber_last(k);
    in_ladder[j] = true;
    out.ladder_indices.push_back(j);
    chain.push_back(out.transformed[j]);
  }
  out.ladder = Ladder(std::move(chain));

  std::vector<Segment> rest;
  for (std::size_t i = 0; i < segs.size(); ++i)
    if (!in_ladder[i]) rest.push_back(out.transformed[i]);
  out.derived = Multisegment(std::move(rest));
  return out;
}

LadderTuple rsk(const Multisegment& m) {
  LadderTuple tuple;
  Multisegment cur = m;
  while (!cur.empty()) {
    KStep s = k_step(cur);
    tuple.push_back(std::move(s.ladder));
    cur = std::move(s.derived);
  }
  return tuple;
}

bool is_dominant(const Ladder& upper, const Ladder& lower) {
  if (upper.size() < lower.size()) return false;
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (!precedes(lower.segments()[i].shift_left(), upper.segments()[i])) return false;
  return true;
}

bool is_permissible(const Ladder& upper, const Ladder& lower) {
  if (!is_dominant(upper, lower)) return false;
  const auto& up = upper.segments();
  const auto& lo = lower.segments();
  const std::size_t k = lo.size(), kp = up.size();
  for (std::size_t i = 1; i <= k; ++i) {
    const Segment shifted = lo[i - 1].shift_left();
    for (std::size_t j = 1; j <= kp; ++j) {
      if (!precedes(shifted, up[j - 1])) continue;
      if (j != kp && precedes(shifted, up[j])) continue;
      // Boundary position found; dominance forces j >= i.
      if (j < i) return false;
      for (std::size_t r = 1; r <= i; ++r)
        if (lo[r - 1].end() < up[j - i + r - 1].begin()) return false;
    }
  }
  return true;
}

namespace {

// Maximal strictly <<-decreasing chains of the distinct segment values of m,
// reported top-down (each chain is a ladder).
std::vector<std::vector<Segment>> maximal_chains(const Multisegment& m) {
  std::vector<Segment> vals;
  for (const auto& s : m.entries())
    if (vals.empty() || !(vals.back() == s)) vals.push_back(s);

  const std::size_t n = vals.size();
  std::vector<std::vector<std::size_t>> below(n);
  std::vector<bool> is_top(n, true);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (precedes(vals[j], vals[i])) {
        below[i].push_back(j);
        is_top[j] = false;
      }

  std::vector<std::vector<Segment>> chains;
  std::vector<Segment> cur;
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    cur.push_back(vals[i]);
    if (below[i].empty())
      chains.push_back(cur);
    else
      for (auto j : below[i]) dfs(j);
    cur.pop_back();
  };
  for (std::size_t i = 0; i < n; ++i)
    if (is_top[i]) dfs(i);
  return chains;
}

}  // namespace

bool is_permissible_pair(const Ladder& l, const Multisegment& m) {
  if (m.empty()) return true;
  for (const auto& chain : maximal_chains(m))
    if (!is_permissible(l, Ladder(chain))) return false;
  return true;
}

bool is_permissible_pair_exhaustive(const Ladder& l, const Multisegment& m) {
  // Every <<-decreasing chain of distinct values, not only maximal ones.
  std::vector<Segment> vals;
  for (const auto& s : m.entries())
    if (vals.empty() || !(vals.back() == s)) vals.push_back(s);
  const std::size_t n = vals.size();
  bool ok = true;
  std::vector<Segment> cur;
  std::function<void(std::size_t)> dfs = [&](std::size_t from) {
    if (!ok) return;
    if (!cur.empty() && !is_permissible(l, Ladder(cur))) {
      ok = false;
      return;
    }
    for (std::size_t j = from; j < n; ++j) {
      if (!cur.empty() && !precedes(vals[j], cur.back())) continue;
      cur.push_back(vals[j]);
      dfs(j + 1);
      cur.pop_back();
    }
  };
  dfs(0);
  return ok;
}

bool is_dominant_tuple(const LadderTuple& t) {
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    if (!is_dominant(t[i], t[i + 1])) return false;
  return true;
}

bool is_permissible_tuple(const LadderTuple& t) {
  if (!is_dominant_tuple(t)) return false;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (!is_permissible(t[i], t[j])) return false;
  return true;
}

Multisegment k_inverse(const Ladder& l, const Multisegment& m) {
  if (!is_permissible_pair(l, m)) {
    // Report the first offending chain.
    for (const auto& chain : maximal_chains(m))
      if (!is_permissible(l, Ladder(chain)))
        throw std::invalid_argument("k_inverse: pair not permissible, witness chain " +
                                    Ladder(chain).str());
    throw std::invalid_argument("k_inverse: pair not permissible");
  }

  const auto& lsegs = l.segments();   // 1-based ladder positions j
  const auto& msegs = m.entries();
  const std::size_t n = msegs.size(), k = lsegs.size();

  // g(i): deepest ladder position strictly above the left-shift of segment i.
  std::vector<int> g(n, 0), f(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Segment shifted = msegs[i].shift_left();
    for (std::size_t j = 1; j <= k; ++j)
      if (precedes(shifted, lsegs[j - 1])) g[i] = static_cast<int>(j);
    if (g[i] == 0) throw std::logic_error("k_inverse: dominance violated");
  }

  std::vector<char> done(n, 0);
  std::function<int(std::size_t)> solve_f = [&](std::size_t i) -> int {
    if (done[i]) return f[i];
    int best = g[i];
    for (std::size_t j = 0; j < n; ++j)
      if (precedes(msegs[j], msegs[i])) best = std::min(best, solve_f(j) - 1);
    done[i] = 1;
    return f[i] = best;
  };
  for (std::size_t i = 0; i < n; ++i) {
    solve_f(i);
    if (f[i] < 1) throw std::logic_error("k_inverse: fiber assignment out of range");
  }

  std::vector<Segment> out;
  out.reserve(n + k);
  for (std::size_t j = 1; j <= k; ++j) {
    std::vector<std::size_t> fiber;
    for (std::size_t i = 0; i < n; ++i)
      if (f[i] == static_cast<int>(j)) fiber.push_back(i);
    std::stable_sort(fiber.begin(), fiber.end(), [&](std::size_t a, std::size_t b) {
      if (msegs[a].begin() != msegs[b].begin()) return msegs[a].begin() < msegs[b].begin();
      return msegs[a].end() > msegs[b].end();
    });
    // Cycle (i_1, ..., i_r, j): begins rotate one step toward the ladder.
    const Segment lj = lsegs[j - 1];
    if (fiber.empty()) {
      out.push_back(lj);
      continue;
    }
    for (std::size_t r = 0; r < fiber.size(); ++r) {
      const Segment self = msegs[fiber[r]];
      const Segment source = r + 1 < fiber.size() ? msegs[fiber[r + 1]] : lj;
      out.push_back(Segment::from_endpoints(source.begin(), self.end()));
    }
    out.push_back(Segment::from_endpoints(msegs[fiber[0]].begin(), lj.end()));
  }
  Multisegment result(std::move(out));

  KStep check = k_step(result);
  if (!(check.ladder == l) || !(check.derived == m))
    throw std::logic_error("k_inverse: round trip failed");
  return result;
}

std::optional<Multisegment> rsk_inverse(const LadderTuple& t) {
  if (!is_dominant_tuple(t))
    throw std::invalid_argument("rsk_inverse: tuple lacks consecutive dominance");
  if (t.empty()) return Multisegment{};
  Multisegment m = t.back().as_multisegment();
  for (std::size_t i = t.size() - 1; i-- > 0;) {
    if (!is_permissible_pair(t[i], m)) return std::nullopt;
    m = k_inverse(t[i], m);
  }
  if (!(rsk(m) == t)) return std::nullopt;
  return m;
}

bool in_image(const LadderTuple& t) { return rsk_inverse(t).has_value(); }

int width(const Multisegment& m) {
  std::vector<Segment> vals;
  std::vector<int> mult;
  for (const auto& s : m.entries()) {
    if (!vals.empty() && vals.back() == s)
      ++mult.back();
    else {
      vals.push_back(s);
      mult.push_back(1);
    }
  }
  const std::size_t n = vals.size();
  std::vector<int> memo(n, -1);
  std::function<int(std::size_t)> solve = [&](std::size_t i) -> int {
    if (memo[i] >= 0) return memo[i];
    int best = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && contained(vals[j], vals[i])) best = std::max(best, solve(j));
    return memo[i] = mult[i] + best;
  };
  int best = 0;
  for (std::size_t i = 0; i < n; ++i) best = std::max(best, solve(i));
  return best;
}

std::string tuple_str(const LadderTuple& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << "; ";
    os << t[i].str();
  }
  os << ")";
  return os.str();
}

}  // namespace mrsk
