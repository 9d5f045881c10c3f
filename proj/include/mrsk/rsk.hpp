#pragma once

#include <span>
#include <vector>

#include "mrsk/core.hpp"

namespace mrsk {

// Depth data for a fixed segment list (indices refer to positions in the
// input span, which need not be canonically sorted).
//
// depth[i] is the length of the longest strictly <<-increasing chain starting
// at i.  Each fiber depth^{-1}(k) is enumerated so that segments weakly
// shrink along it (containment), ties kept in position order; sigma cycles
// each fiber's enumeration.
struct DepthTable {
  std::vector<int> depth;
  int max_depth = -1;             // -1 for the empty list
  int max_genuine_depth = -1;     // over genuine entries only
  std::vector<std::vector<std::size_t>> fibers;  // fibers[k] = enumeration of depth k
  std::vector<std::size_t> sigma;
  std::vector<bool> distinguished;

  std::size_t fiber_last(int k) const { return fibers[k].back(); }
};

DepthTable depth_table(std::span<const Segment> segs);
inline DepthTable depth_table(const Multisegment& m) {
  if (m.empty()) throw std::invalid_argument("depth_table: zero multisegment");
  return depth_table(std::span<const Segment>(m.entries()));
}

// One extraction step m -> (highest ladder, derived multisegment).
struct KStep {
  Ladder ladder;
  Multisegment derived;
  // The transformed segment for every input index ([b_i, e_{sigma(i)}]).
  std::vector<Segment> transformed;
  // Input indices contributing to the ladder, by increasing depth.
  std::vector<std::size_t> ladder_indices;
};

KStep k_step(const Multisegment& m);

using LadderTuple = std::vector<Ladder>;

// Full recursion; empty input gives the empty tuple.
LadderTuple rsk(const Multisegment& m);

// Orders on ladders.  Ladders are indexed from their <<-largest segment.
bool is_dominant(const Ladder& upper, const Ladder& lower);
bool is_permissible(const Ladder& upper, const Ladder& lower);
// Quantifies over the maximal <<-decreasing chains of m.
bool is_permissible_pair(const Ladder& l, const Multisegment& m);
// Same question decided over every <<-decreasing chain; test oracle.
bool is_permissible_pair_exhaustive(const Ladder& l, const Multisegment& m);

// Consecutive-dominance check for a tuple (membership in the tableau-pair
// identification's domain).
bool is_dominant_tuple(const LadderTuple& t);
// Pairwise permissibility on top of consecutive dominance.
bool is_permissible_tuple(const LadderTuple& t);

// Inverse of k_step; requires (l, m) permissible and verifies the round trip.
Multisegment k_inverse(const Ladder& l, const Multisegment& m);

// Whether a dominant tuple arises from the extraction recursion.
bool in_image(const LadderTuple& t);
// Rebuilds the multisegment; nullopt when the tuple is not in the image.
std::optional<Multisegment> rsk_inverse(const LadderTuple& t);

// Longest containment chain (equal segments allowed, counted with
// multiplicity); zero for the empty multisegment.
int width(const Multisegment& m);

std::string tuple_str(const LadderTuple& t);

}  // namespace mrsk
