#pragma once

#include <set>
#include <vector>

#include "mrsk/core.hpp"
#include "mrsk/tableaux.hpp"
#include "mrsk/words.hpp"

namespace mrsk::oracles {

// Cell-by-cell bumping construction of the tableau pair: entries sorted by
// end descending then begin ascending, begins inserted by displacing the
// leftmost weakly smaller entry, ends recorded at the new box.  Independent
// of the extraction recursion.
TableauPair rsk_by_insertion(const Multisegment& m);

// Closure of a word under the two elementary exchange moves.
std::set<Word> knuth_class(const Word& w);

// Structural word tests that avoid the insertion algorithm: split into
// maximal weakly increasing runs and validate the stacked rows.
bool is_tableau_word(const Word& w);
bool is_antitableau_word(const Word& w);

// Subword test on a fixed reduced expression.
bool bruhat_leq_subword(const std::vector<int>& u, const std::vector<int>& w);
std::vector<int> reduced_word(std::vector<int> w);

// Every index chain satisfying the two defining clauses of the leading
// chain; asserts they share one segment multiset and returns it.
std::vector<Segment> leading_chain_values(const Multisegment& m);

}  // namespace mrsk::oracles
