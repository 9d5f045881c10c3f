#include "mrsk/socle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "mrsk/mw.hpp"
#include "mrsk/ring.hpp"

namespace mrsk {

namespace {

Multisegment socle_rec(const Multisegment& m, std::vector<Segment> ladder_chain) {
  if (ladder_chain.empty()) return m;
  if (m.empty()) {
    Multisegment out;
    for (const auto& s : ladder_chain) out.add(s);
    return out;
  }

  const Segment low = ladder_chain.back();  // minimal begin of the ladder
  if (low.begin() <= m.min_begin()) {
    // Case 1: absorb the ladder's lowest segment together with everything in
    // m that starts with it and ends no later.
    Multisegment absorbed;
    for (const auto& s : m.entries())
      if (s.begin() == low.begin() && s.end() <= low.end()) absorbed.add(s);
    ladder_chain.pop_back();
    Multisegment rest = socle_rec(m - absorbed, std::move(ladder_chain));
    rest += absorbed;
    rest.add(low);
    return rest;
  }

  // Case 2: commute past one truncation step.
  MwStepResult step = mw_step(m);
  Multisegment inner = socle_rec(step.dagger, std::move(ladder_chain));
  return invert_mw_step(inner, step.delta_circ);
}

}  // namespace

Multisegment invert_mw_step(const Multisegment& target, Segment circ) {
  if (circ.is_dummy()) throw std::invalid_argument("invert_mw_step: genuine circ expected");

  // Re-attach the chain circ.begin(), ..., circ.end(): each point c either
  // revives a singleton [c,c] or extends a segment [c+1, e] of the target.
  // The greedy replay certifies the candidate; injectivity makes it unique.
  std::vector<Multisegment> found;
  Multisegment work = target;
  std::vector<Segment> placed;

#ifdef NDEBUG
  constexpr bool exhaust = false;  // first match wins; replay certifies it
#else
  constexpr bool exhaust = true;  // keep searching and assert uniqueness
#endif

  std::function<void(int, int)> place = [&](int c, int prev_end) {
    if (!exhaust && !found.empty()) return;
    if (c > circ.end()) {
      Multisegment candidate = work;
      for (const auto& s : placed) candidate.add(s);
      MwStepResult replay = mw_step(candidate);
      if (replay.dagger == target && replay.delta_circ == circ) found.push_back(candidate);
      return;
    }
    if (c > prev_end) {
      placed.push_back(Segment::genuine(c, c));
      place(c + 1, c);
      placed.pop_back();
      if (!exhaust && !found.empty()) return;
    }
    std::vector<int> ends;
    for (const auto& s : work.entries())
      if (!s.is_dummy() && s.begin() == c + 1 && s.end() > prev_end) ends.push_back(s.end());
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    for (int e : ends) {
      const Segment taken = Segment::genuine(c + 1, e);
      work.remove_one(taken);
      placed.push_back(Segment::genuine(c, e));
      place(c + 1, e);
      placed.pop_back();
      work.add(taken);
      if (!exhaust && !found.empty()) return;
    }
  };
  place(circ.begin(), circ.begin() - 1);

  if (found.empty())
    throw std::logic_error("invert_mw_step: no preimage for (" + target.str() + ", " +
                           circ.str() + ")");
  for (const auto& p : found)
    if (!(p == found.front()))
      throw std::logic_error("invert_mw_step: preimage not unique for (" + target.str() +
                             ", " + circ.str() + ")");
  return found.front();
}

Multisegment socle(const Multisegment& m, const Ladder& l) {
  const Multisegment mg = m.genuine_part();
  auto lg = l.genuine_part();
  if (!lg) return mg;
  return socle_rec(mg, lg->segments());
}

Multisegment socle(const Multisegment& m, const Multisegment& ladder) {
  if (ladder.empty()) return m.genuine_part();
  return socle(m, Ladder::from_multisegment(ladder));
}

Multisegment socle_left(const Ladder& l, const Multisegment& m) {
  const Multisegment conj = socle(m.contragredient(), l.contragredient());
  return conj.contragredient();
}

Multisegment socle_chain(const LadderTuple& t, SocleSide side) {
  std::vector<Ladder> genuine;
  for (const auto& l : t)
    if (auto g = l.genuine_part()) genuine.push_back(*g);
  if (genuine.empty()) return {};

  if (side == SocleSide::Right) {
    Multisegment acc = genuine.back().as_multisegment();
    for (std::size_t i = genuine.size() - 1; i-- > 0;) acc = socle(acc, genuine[i]);
    return acc;
  }
  Multisegment acc = genuine.front().as_multisegment();
  for (std::size_t i = 1; i < genuine.size(); ++i) acc = socle_left(genuine[i], acc);
  return acc;
}

std::vector<Segment> zeta_factors(const Multisegment& m) {
  if (m.has_dummies()) throw std::invalid_argument("zeta_factors: genuine input expected");
  return m.entries();  // canonical order is begin-descending already
}

std::vector<Segment> lambda_factors(const Multisegment& m) {
  auto v = zeta_factors(m);
  std::reverse(v.begin(), v.end());
  return v;
}

namespace {

// Ladder of singletons [a,a] + ... + [b,b].
Ladder singleton_expansion(Segment s) {
  std::vector<Segment> chain;
  for (int v = s.end(); v >= s.begin(); --v) chain.push_back(Segment::genuine(v, v));
  return Ladder(std::move(chain));
}

std::multiset<std::string> ladder_keys(const std::vector<Ladder>& ls) {
  std::multiset<std::string> keys;
  for (const auto& l : ls) keys.insert(l.str());
  return keys;
}

}  // namespace

InterpolationReport interpolation_check(const Multisegment& m, const Multisegment& dummies) {
  if (m.empty() || m.has_dummies())
    throw std::invalid_argument("interpolation_check: nonzero genuine multisegment expected");
  InterpolationReport rep;

  const auto& segs = m.entries();
  auto n_d = [&](int a) { return dummies.dummy_multiplicity(a); };

  // First hypothesis: multiplicities grow along end points fast enough and
  // never exceed them from below.
  bool hyp1 = true;
  for (const auto& si : segs) {
    for (const auto& sj : segs) {
      if (sj.end() >= si.end()) continue;
      int same_end = 0;
      for (const auto& sk : segs)
        if (sk.end() == sj.end()) ++same_end;
      if (n_d(si.end()) < n_d(sj.end()) + same_end) hyp1 = false;
    }
    for (int t : dummies.dummy_support())
      if (t < si.end() && n_d(t) > n_d(si.end())) hyp1 = false;
  }
  rep.zeta_hypothesis = hyp1;

  // Second hypothesis: multiplicities drop by at least the segment count at
  // every step of the support interval.
  const int r = static_cast<int>(m.count());
  bool hyp2 = true;
  for (int i = m.min_begin(); i < m.max_end(); ++i)
    if (n_d(i) < n_d(i + 1) + r) hyp2 = false;
  rep.langlands_hypothesis = hyp2;

  std::vector<Ladder> factors = rsk_standard_factors(m, dummies);

  if (hyp1) {
    std::vector<Ladder> expected;
    for (const auto& s : segs) expected.push_back(Ladder::single(s));
    if (ladder_keys(factors) == ladder_keys(expected)) {
      rep.cls = InterpolationClass::ZelevinskyMatch;
      return rep;
    }
    rep.mismatch = true;
  }
  if (hyp2) {
    std::vector<Ladder> expected;
    const Multisegment involuted = mw_involution(m);
    for (const auto& s : involuted.entries()) expected.push_back(singleton_expansion(s));
    if (ladder_keys(factors) == ladder_keys(expected)) {
      rep.cls = InterpolationClass::LanglandsMatch;
      return rep;
    }
    rep.mismatch = true;
  }
  return rep;
}

}  // namespace mrsk
