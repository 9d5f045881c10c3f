#include "mrsk/tableaux.hpp"
#include "mrsk/words.hpp"

namespace mrsk {

// Compares two computations of the pair of the reflected multisegment: the
// extraction applied to it directly, versus evacuation of the original pair
// (reverse complement over the occupied alphabet, swapping the two tableaux).
bool schuetzenberger_relation_check(const Multisegment& m) {
  if (m.empty()) return true;
  if (m.has_dummies())
    throw std::invalid_argument("schuetzenberger_relation_check: genuine input expected");

  // Work inside the positive integers; everything here commutes with shifts.
  int lo = m.min_begin();
  Multisegment base = m;
  if (lo < 1) {
    std::vector<Segment> shifted;
    for (const auto& s : base.entries())
      shifted.push_back(Segment::genuine(s.begin() + 1 - lo, s.end() + 1 - lo));
    base = Multisegment(std::move(shifted));
    lo = 1;
  }
  const int hi = base.max_end();
  const int mirror = lo + hi;

  std::vector<Segment> reflected;
  for (const auto& s : base.entries())
    reflected.push_back(Segment::genuine(mirror - s.end(), mirror - s.begin()));
  const Multisegment mirrored(std::move(reflected));

  const TableauPair direct = from_ladder_tuple(rsk(mirrored));

  auto [p, q] = crsk(iota(base));
  const InvertedTableau via_p = inv_map(evacuation(p, lo, hi));
  const InvertedTableau via_q = inv_map(evacuation(q, lo, hi));

  return via_q == direct.p && via_p == direct.q;
}

}  // namespace mrsk
