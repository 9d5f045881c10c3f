#pragma once

#include <vector>

#include "mrsk/core.hpp"

namespace mrsk {

// One truncation step m -> (m^dagger, delta_circ) together with the leading
// chain it used.  `leading` indexes into the input's canonical entry list;
// `delta_circ` = [min m, min m + |leading| - 1].
struct MwStepResult {
  Multisegment dagger;
  Segment delta_circ = Segment::genuine(0, 0);
  std::vector<std::size_t> leading;
};

// Greedy chain: start at the genuine segment with minimal begin (then minimal
// end), repeatedly extend by a genuine segment whose begin is one larger,
// whose end strictly grows and is minimal such.  Ties resolved by position.
std::vector<std::size_t> leading_indices(const Multisegment& m);

// Genuine-only step: leading segments lose their first point, singletons
// vanish.  Rejects enhanced input.
MwStepResult mw_step(const Multisegment& m);

// Same step but a leading [a,a] turns into d(a) and existing dummies pass
// through untouched.  Requires a nonzero genuine part.
MwStepResult mw_step_enhanced(const Multisegment& m);

// Conjugation of the step by the contragredient (truncates at end points).
// Enhanced inputs use the enhanced step.
MwStepResult mw_step_dual(const Multisegment& m);

// Iterated step, collecting the delta_circ segments: an involution.
Multisegment mw_involution(const Multisegment& m);

// True iff no segment equals [min m, min m].
bool is_nondegenerate(const Multisegment& m);

}  // namespace mrsk
