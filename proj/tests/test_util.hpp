#pragma once

#include <cstdint>
#include <vector>

#include "mrsk/core.hpp"

namespace mrsk::testutil {

// Small deterministic generator for property checks.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

 private:
  std::uint64_t state_;
};

inline Multisegment random_multisegment(Rng& rng, int lo, int hi, int max_segments,
                                        bool with_dummies = false) {
  std::vector<Segment> segs;
  const int n = rng.below(max_segments + 1);
  for (int i = 0; i < n; ++i) {
    if (with_dummies && rng.below(4) == 0) {
      segs.push_back(Segment::dummy(lo + rng.below(hi - lo + 1)));
    } else {
      int a = lo + rng.below(hi - lo + 1);
      int b = a + rng.below(hi - a + 1);
      segs.push_back(Segment::genuine(a, b));
    }
  }
  return Multisegment(segs);
}

}  // namespace mrsk::testutil
