#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mrsk/core.hpp"
#include "mrsk/words.hpp"

namespace mrsk {

// Finite slice of multisegment space: segments with endpoints inside
// [lo, hi], at most max_segments genuine entries, optional dummies with a
// per-point multiplicity cap, optional cap on total size.
struct EnumSpec {
  int lo = 1;
  int hi = 4;
  int max_segments = 5;
  long long max_size = 0;  // 0 = unbounded
  int dummy_budget = 0;    // per-point cap for d(a), a in [lo, hi]
  long long cap = 20'000'000;

  std::string str() const;
};

// Number of multisegments the spec enumerates (the empty one included).
long long enumeration_count(const EnumSpec& spec);

// Visits every multisegment in a fixed canonical order; throws when the
// projected count exceeds spec.cap.
void for_each_multisegment(const EnumSpec& spec,
                           const std::function<void(const Multisegment&)>& visit);
std::vector<Multisegment> enumerate_multisegments(const EnumSpec& spec);

// All ladders with entries in the window (genuine only unless with_dummies).
std::vector<Ladder> enumerate_ladders(int lo, int hi, bool with_dummies = false);

// All row tuples with word indices at most max_index, values at most
// max_value, and 1 <= total length <= max_total.
void for_each_row_tuple(int max_index, int max_value, int max_total,
                        const std::function<void(const RowTuple&)>& visit);

// Shard s visits exactly the tuples whose smallest cell (index, value) is
// the s-th type; shard count is row_tuple_shards(...).
std::size_t row_tuple_shards(int max_index, int max_value);
void for_each_row_tuple_shard(int max_index, int max_value, int max_total,
                              std::size_t shard,
                              const std::function<void(const RowTuple&)>& visit);

// Deterministic sharded runner: workers claim shards, results merge in shard
// order.  `make_shard(t)` visits shard t's items.
struct ShardedRun {
  long long instances = 0;
  std::vector<std::string> failures;  // sorted, capped
  long long failure_count = 0;
  std::vector<std::pair<std::string, long long>> tallies;  // sorted by key
};

class ShardContext {
 public:
  void fail(const std::string& repro);
  void tally(const std::string& key, long long delta = 1);
  void item() { ++instances_; }

 private:
  friend ShardedRun run_sharded(std::size_t, int,
                                const std::function<void(std::size_t, ShardContext&)>&);
  long long instances_ = 0;
  std::vector<std::string> failures_;
  long long failure_count_ = 0;
  std::vector<std::pair<std::string, long long>> tallies_;
};

ShardedRun run_sharded(std::size_t shards, int jobs,
                       const std::function<void(std::size_t, ShardContext&)>& body);

}  // namespace mrsk
