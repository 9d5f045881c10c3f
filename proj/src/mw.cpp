#include "mrsk/mw.hpp"

#include <algorithm>

namespace mrsk {

std::vector<std::size_t> leading_indices(const Multisegment& m) {
  const auto& segs = m.entries();
  std::vector<std::size_t> chain;
  // Start: genuine, minimal begin, then minimal end; smallest index on ties.
  std::size_t cur = segs.size();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (segs[i].is_dummy()) continue;
    if (cur == segs.size() || segs[i].begin() < segs[cur].begin() ||
        (segs[i].begin() == segs[cur].begin() && segs[i].end() < segs[cur].end()))
      cur = i;
  }
  if (cur == segs.size())
    throw std::invalid_argument("leading_indices: zero genuine part");
  chain.push_back(cur);
  for (;;) {
    std::size_t next = segs.size();
    for (std::size_t i = 0; i < segs.size(); ++i) {
      if (segs[i].is_dummy()) continue;
      if (segs[i].begin() != segs[cur].begin() + 1) continue;
      if (!precedes(segs[cur], segs[i])) continue;
      if (next == segs.size() || segs[i].end() < segs[next].end()) next = i;
    }
    if (next == segs.size()) break;
    chain.push_back(next);
    cur = next;
  }
  return chain;
}

namespace {

MwStepResult step_impl(const Multisegment& m, bool keep_empties_as_dummies) {
  MwStepResult res;
  res.leading = leading_indices(m);
  const auto& segs = m.entries();
  const int lo = segs[res.leading.front()].begin();
  res.delta_circ = Segment::genuine(lo, lo + static_cast<int>(res.leading.size()) - 1);

  std::vector<bool> is_leading(segs.size(), false);
  for (auto i : res.leading) is_leading[i] = true;

  std::vector<Segment> out;
  out.reserve(segs.size());
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (!is_leading[i]) {
      out.push_back(segs[i]);
      continue;
    }
    if (auto tail = segs[i].behead())
      out.push_back(*tail);
    else if (keep_empties_as_dummies)
      out.push_back(Segment::dummy(segs[i].begin()));
  }
  res.dagger = Multisegment(std::move(out));
  return res;
}

}  // namespace

MwStepResult mw_step(const Multisegment& m) {
  if (m.empty()) throw std::invalid_argument("mw_step: zero multisegment");
  if (m.has_dummies())
    throw std::invalid_argument("mw_step: enhanced input, use mw_step_enhanced");
  return step_impl(m, /*keep_empties_as_dummies=*/false);
}

MwStepResult mw_step_enhanced(const Multisegment& m) {
  if (m.genuine_part().empty())
    throw std::invalid_argument("mw_step_enhanced: zero genuine part");
  return step_impl(m, /*keep_empties_as_dummies=*/true);
}

MwStepResult mw_step_dual(const Multisegment& m) {
  const Multisegment rev = m.contragredient();
  MwStepResult r = m.has_dummies() ? mw_step_enhanced(rev) : mw_step(rev);
  MwStepResult out;
  out.dagger = r.dagger.contragredient();
  out.delta_circ = r.delta_circ.contragredient();
  // Index bookkeeping does not survive the conjugation.
  return out;
}

Multisegment mw_involution(const Multisegment& m) {
  if (m.has_dummies())
    throw std::invalid_argument("mw_involution: genuine multisegments only");
  std::vector<Segment> acc;
  Multisegment cur = m;
  while (!cur.empty()) {
    MwStepResult r = step_impl(cur, false);
    acc.push_back(r.delta_circ);
    cur = std::move(r.dagger);
  }
  return Multisegment(std::move(acc));
}

bool is_nondegenerate(const Multisegment& m) {
  if (m.empty()) throw std::invalid_argument("is_nondegenerate: zero multisegment");
  const int lo = m.min_begin();
  return !m.contains(Segment::genuine(lo, lo));
}

}  // namespace mrsk
