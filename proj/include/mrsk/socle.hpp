#pragma once

#include <vector>

#include "mrsk/core.hpp"
#include "mrsk/rsk.hpp"

namespace mrsk {

// Label of the socle of the product of the classes of m and of the ladder l,
// computed by the two-case recursion: peel the ladder's lowest segment when
// it starts at or before m, otherwise commute past one truncation step and
// invert it.  Dummies are ignored (genuine parts only).
Multisegment socle(const Multisegment& m, const Ladder& l);
Multisegment socle(const Multisegment& m, const Multisegment& ladder);

// Product on the other side, via contragredient conjugation.
Multisegment socle_left(const Ladder& l, const Multisegment& m);

enum class SocleSide { Right, Left };

// Folds socle over the tuple: right side from the last ladder backward,
// left side from the first ladder forward.  Dummy cells are dropped.
Multisegment socle_chain(const LadderTuple& t, SocleSide side = SocleSide::Right);

// The unique p with one truncation step equal to (target, circ); search over
// re-attachments of the removed chain, certified by replay.
Multisegment invert_mw_step(const Multisegment& target, Segment circ);

// Product factors in the order convention begin-descending (no factor
// precedes a later one).
std::vector<Segment> zeta_factors(const Multisegment& m);
// Reversed order, for the opposite-side standard product.
std::vector<Segment> lambda_factors(const Multisegment& m);

enum class InterpolationClass { ZelevinskyMatch, LanglandsMatch, Neither };

struct InterpolationReport {
  InterpolationClass cls = InterpolationClass::Neither;
  bool zeta_hypothesis = false;
  bool langlands_hypothesis = false;
  // Set when a hypothesis held but the factors disagreed (a genuine failure).
  bool mismatch = false;
};

// Classifies the extraction factors of (m, dummies) against the two extreme
// standard products: the segments of m themselves, or the singleton ladders
// of the segments of the involution of m.
InterpolationReport interpolation_check(const Multisegment& m, const Multisegment& dummies);

}  // namespace mrsk
