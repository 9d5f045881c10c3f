#include "mrsk/oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace mrsk::oracles {

TableauPair rsk_by_insertion(const Multisegment& m) {
  std::vector<Segment> order = m.entries();
  std::stable_sort(order.begin(), order.end(), [](Segment a, Segment b) {
    if (a.end() != b.end()) return a.end() > b.end();
    return a.begin() < b.begin();
  });

  std::vector<std::vector<int>> p, q;
  for (const auto& s : order) {
    int x = s.begin();
    std::size_t row = 0;
    for (;; ++row) {
      if (row == p.size()) {
        p.push_back({x});
        q.push_back({s.end()});
        break;
      }
      // displace the leftmost entry weakly below x
      auto it = std::find_if(p[row].begin(), p[row].end(), [&](int v) { return v <= x; });
      if (it == p[row].end()) {
        p[row].push_back(x);
        q[row].push_back(s.end());
        break;
      }
      std::swap(x, *it);
    }
  }
  if (p.empty()) return {};
  return TableauPair{InvertedTableau(std::move(p)), InvertedTableau(std::move(q))};
}

std::set<Word> knuth_class(const Word& w) {
  std::set<Word> seen{w};
  std::vector<Word> frontier{w};
  while (!frontier.empty()) {
    Word cur = frontier.back();
    frontier.pop_back();
    auto push = [&](Word next) {
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    };
    for (std::size_t i = 0; i + 2 < cur.size(); ++i) {
      const int a = cur[i], b = cur[i + 1], c = cur[i + 2];
      // xzy <-> zxy for x <= y < z
      if (a <= c && c < b) {
        Word nx = cur;
        std::swap(nx[i], nx[i + 1]);
        push(std::move(nx));
      }
      if (b <= c && c < a) {
        Word nx = cur;
        std::swap(nx[i], nx[i + 1]);
        push(std::move(nx));
      }
      // yxz <-> yzx for x < y <= z
      if (b < a && a <= c) {
        Word nx = cur;
        std::swap(nx[i + 1], nx[i + 2]);
        push(std::move(nx));
      }
      if (c < a && a <= b) {
        Word nx = cur;
        std::swap(nx[i + 1], nx[i + 2]);
        push(std::move(nx));
      }
    }
  }
  return seen;
}

namespace {

std::vector<Word> increasing_runs(const Word& w) {
  std::vector<Word> runs;
  for (int v : w) {
    if (runs.empty() || runs.back().back() > v) runs.push_back({});
    runs.back().push_back(v);
  }
  return runs;
}

}  // namespace

bool is_tableau_word(const Word& w) {
  if (w.empty()) return true;
  auto runs = increasing_runs(w);
  for (std::size_t i = 0; i + 1 < runs.size(); ++i)
    if (runs[i].size() > runs[i + 1].size()) return false;
  std::vector<std::vector<int>> rows(runs.rbegin(), runs.rend());
  try {
    Tableau t{std::move(rows)};
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool is_antitableau_word(const Word& w) {
  if (w.empty()) return true;
  auto runs = increasing_runs(w);
  for (std::size_t i = 0; i + 1 < runs.size(); ++i)
    if (runs[i].size() < runs[i + 1].size()) return false;
  // right-justify the stacked rows (top row is the last run)
  const int width = static_cast<int>(runs.front().size());
  std::vector<int> offsets;
  std::vector<std::vector<int>> rows;
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    offsets.push_back(width - static_cast<int>(it->size()));
    rows.push_back(*it);
  }
  try {
    SkewTableau s{std::move(offsets), std::move(rows)};
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::vector<int> reduced_word(std::vector<int> w) {
  std::vector<int> moves;
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        moves.push_back(static_cast<int>(i));
        changed = true;
        break;
      }
    }
    if (!changed) break;
  }
  std::reverse(moves.begin(), moves.end());
  return moves;
}

bool bruhat_leq_subword(const std::vector<int>& u, const std::vector<int>& w) {
  if (u.size() != w.size()) throw std::invalid_argument("bruhat_leq_subword: size mismatch");
  const std::size_t n = u.size();
  std::vector<int> identity(n);
  for (std::size_t i = 0; i < n; ++i) identity[i] = static_cast<int>(i);
  if (u == identity) return true;

  const std::vector<int> rw = reduced_word(w);
  const int target_len = permutation_length(u);

  // Some subword of one reduced expression must multiply to u with exactly
  // length(u) letters.
  bool found = false;
  std::vector<int> cur = identity;
  std::function<void(std::size_t, int)> dfs = [&](std::size_t pos, int used) {
    if (found) return;
    if (used == target_len) {
      if (cur == u) found = true;
      return;
    }
    if (pos == rw.size()) return;
    if (rw.size() - pos < static_cast<std::size_t>(target_len - used)) return;
    // take rw[pos]
    std::swap(cur[rw[pos]], cur[rw[pos] + 1]);
    dfs(pos + 1, used + 1);
    std::swap(cur[rw[pos]], cur[rw[pos] + 1]);
    // skip rw[pos]
    dfs(pos + 1, used);
  };
  dfs(0, 0);
  return found;
}

std::vector<Segment> leading_chain_values(const Multisegment& m) {
  const auto& segs = m.entries();
  std::vector<std::size_t> genuine;
  for (std::size_t i = 0; i < segs.size(); ++i)
    if (!segs[i].is_dummy()) genuine.push_back(i);
  if (genuine.empty()) throw std::invalid_argument("leading_chain_values: zero genuine part");

  int lo = segs[genuine[0]].begin(), loe = segs[genuine[0]].end();
  for (auto i : genuine) {
    if (segs[i].begin() < lo || (segs[i].begin() == lo && segs[i].end() < loe)) {
      lo = segs[i].begin();
      loe = segs[i].end();
    }
  }

  std::vector<std::vector<Segment>> complete;
  std::vector<std::size_t> chain;
  std::function<void()> extend = [&]() {
    const Segment last = segs[chain.back()];
    bool extended = false;
    for (auto i : genuine) {
      if (std::find(chain.begin(), chain.end(), i) != chain.end()) continue;
      if (segs[i].begin() != last.begin() + 1 || !precedes(last, segs[i])) continue;
      // minimal end among candidates is required
      bool minimal = true;
      for (auto j : genuine) {
        if (std::find(chain.begin(), chain.end(), j) != chain.end()) continue;
        if (segs[j].begin() == last.begin() + 1 && precedes(last, segs[j]) &&
            segs[j].end() < segs[i].end())
          minimal = false;
      }
      if (!minimal) continue;
      extended = true;
      chain.push_back(i);
      extend();
      chain.pop_back();
    }
    if (!extended) {
      std::vector<Segment> vals;
      for (auto i : chain) vals.push_back(segs[i]);
      complete.push_back(std::move(vals));
    }
  };
  for (auto i : genuine) {
    if (segs[i].begin() != lo || segs[i].end() != loe) continue;
    chain.push_back(i);
    extend();
    chain.pop_back();
  }

  if (complete.empty()) throw std::logic_error("leading_chain_values: no chain found");
  for (const auto& c : complete)
    if (c != complete.front())
      throw std::logic_error("leading_chain_values: chain values are not unique");
  return complete.front();
}

}  // namespace mrsk::oracles
