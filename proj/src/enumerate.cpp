#include "mrsk/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

namespace mrsk {

std::string EnumSpec::str() const {
  std::ostringstream os;
  os << "window [" << lo << "," << hi << "], <=" << max_segments << " segments";
  if (max_size) os << ", size<=" << max_size;
  if (dummy_budget) os << ", dummy budget " << dummy_budget;
  return os.str();
}

namespace {

std::vector<Segment> window_segments(int lo, int hi) {
  std::vector<Segment> segs;
  for (int a = lo; a <= hi; ++a)
    for (int b = a; b <= hi; ++b) segs.push_back(Segment::genuine(a, b));
  std::sort(segs.begin(), segs.end(), canonical_less);
  return segs;
}

struct MsEnumerator {
  const EnumSpec& spec;
  std::vector<Segment> genuine;
  std::vector<int> dummy_points;

  explicit MsEnumerator(const EnumSpec& s) : spec(s) {
    if (s.lo > s.hi) throw std::invalid_argument("enumerate: empty window");
    genuine = window_segments(s.lo, s.hi);
    if (s.dummy_budget > 0)
      for (int a = s.lo; a <= s.hi; ++a) dummy_points.push_back(a);
  }

  // Dummy layers are the outer loop so genuine enumeration repeats per layer.
  void run(const std::function<void(const Multisegment&)>& visit, long long* count_only) {
    std::vector<Segment> current;
    dummy_layer(0, current, visit, count_only);
  }

  void dummy_layer(std::size_t idx, std::vector<Segment>& current,
                   const std::function<void(const Multisegment&)>& visit,
                   long long* count_only) {
    if (idx == dummy_points.size()) {
      genuine_layer(0, 0, current, visit, count_only);
      return;
    }
    for (int mult = 0; mult <= spec.dummy_budget; ++mult) {
      for (int c = 0; c < mult; ++c) current.push_back(Segment::dummy(dummy_points[idx]));
      dummy_layer(idx + 1, current, visit, count_only);
      for (int c = 0; c < mult; ++c) current.pop_back();
    }
  }

  void genuine_layer(std::size_t from, int used, std::vector<Segment>& current,
                     const std::function<void(const Multisegment&)>& visit,
                     long long* count_only) {
    if (count_only)
      ++*count_only;
    else
      visit(Multisegment(current));
    if (used == spec.max_segments) return;
    for (std::size_t i = from; i < genuine.size(); ++i) {
      if (spec.max_size) {
        long long sz = genuine[i].length();
        for (const auto& s : current) sz += s.length();
        if (sz > spec.max_size) continue;
      }
      current.push_back(genuine[i]);
      genuine_layer(i, used + 1, current, visit, count_only);
      current.pop_back();
    }
  }
};

}  // namespace

long long enumeration_count(const EnumSpec& spec) {
  long long n = 0;
  MsEnumerator e(spec);
  e.run({}, &n);
  return n;
}

void for_each_multisegment(const EnumSpec& spec,
                           const std::function<void(const Multisegment&)>& visit) {
  const long long projected = enumeration_count(spec);
  if (projected > spec.cap) {
    std::ostringstream os;
    os << "enumeration budget exceeded: " << projected << " > cap " << spec.cap;
    throw std::invalid_argument(os.str());
  }
  MsEnumerator e(spec);
  e.run(visit, nullptr);
}

std::vector<Multisegment> enumerate_multisegments(const EnumSpec& spec) {
  std::vector<Multisegment> out;
  for_each_multisegment(spec, [&](const Multisegment& m) { out.push_back(m); });
  return out;
}

std::vector<Ladder> enumerate_ladders(int lo, int hi, bool with_dummies) {
  std::vector<Segment> segs = window_segments(lo, hi);
  if (with_dummies)
    for (int a = lo; a <= hi; ++a) segs.push_back(Segment::dummy(a));
  std::sort(segs.begin(), segs.end(), canonical_less);

  std::vector<Ladder> out;
  std::vector<Segment> chain;
  // Canonical order lists potential predecessors before successors.
  std::function<void(std::size_t)> dfs = [&](std::size_t from) {
    if (!chain.empty()) out.push_back(Ladder(chain));
    for (std::size_t i = from; i < segs.size(); ++i) {
      if (!chain.empty() && !precedes(segs[i], chain.back())) continue;
      chain.push_back(segs[i]);
      dfs(i + 1);
      chain.pop_back();
    }
  };
  dfs(0);
  return out;
}

namespace {

struct CellGrid {
  struct Cell {
    int j, v;
  };
  std::vector<Cell> cells;
  CellGrid(int max_index, int max_value) {
    for (int j = 1; j <= max_index; ++j)
      for (int v = 1; v <= max_value; ++v) cells.push_back({j, v});
  }
};

// Multisets of cells as nondecreasing type sequences; each nonempty multiset
// appears exactly once, and its first (smallest) type identifies the shard.
void walk_tuples(const CellGrid& grid, int max_index, int max_total,
                 std::size_t first_type, bool fixed_first,
                 const std::function<void(const RowTuple&)>& visit) {
  std::vector<Word> words(static_cast<std::size_t>(max_index));
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int remaining) {
    visit(RowTuple(words));
    if (remaining == 0) return;
    for (std::size_t i = from; i < grid.cells.size(); ++i) {
      auto& w = words[static_cast<std::size_t>(grid.cells[i].j) - 1];
      w.push_back(grid.cells[i].v);
      rec(i, remaining - 1);
      w.pop_back();
    }
  };
  if (!fixed_first) {
    std::function<void(std::size_t, int)> all = [&](std::size_t from, int remaining) {
      bool any = false;
      for (const auto& w : words)
        if (!w.empty()) any = true;
      if (any) visit(RowTuple(words));
      if (remaining == 0) return;
      for (std::size_t i = from; i < grid.cells.size(); ++i) {
        auto& w = words[static_cast<std::size_t>(grid.cells[i].j) - 1];
        w.push_back(grid.cells[i].v);
        all(i, remaining - 1);
        w.pop_back();
      }
    };
    all(0, max_total);
    return;
  }
  if (first_type >= grid.cells.size()) return;
  auto& w0 = words[static_cast<std::size_t>(grid.cells[first_type].j) - 1];
  w0.push_back(grid.cells[first_type].v);
  rec(first_type, max_total - 1);
  w0.pop_back();
}

}  // namespace

void for_each_row_tuple(int max_index, int max_value, int max_total,
                        const std::function<void(const RowTuple&)>& visit) {
  CellGrid grid(max_index, max_value);
  walk_tuples(grid, max_index, max_total, 0, /*fixed_first=*/false, visit);
}

std::size_t row_tuple_shards(int max_index, int max_value) {
  return static_cast<std::size_t>(max_index) * static_cast<std::size_t>(max_value);
}

void for_each_row_tuple_shard(int max_index, int max_value, int max_total,
                              std::size_t shard,
                              const std::function<void(const RowTuple&)>& visit) {
  CellGrid grid(max_index, max_value);
  walk_tuples(grid, max_index, max_total, shard, /*fixed_first=*/true, visit);
}

void ShardContext::fail(const std::string& repro) {
  ++failure_count_;
  if (failures_.size() < 64) failures_.push_back(repro);
}

void ShardContext::tally(const std::string& key, long long delta) {
  for (auto& [k, v] : tallies_)
    if (k == key) {
      v += delta;
      return;
    }
  tallies_.push_back({key, delta});
}

ShardedRun run_sharded(std::size_t shards, int jobs,
                       const std::function<void(std::size_t, ShardContext&)>& body) {
  if (jobs < 1) jobs = 1;
  std::vector<ShardContext> contexts(shards);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= shards) return;
      body(t, contexts[t]);
    }
  };
  if (jobs == 1 || shards <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  ShardedRun out;
  std::map<std::string, long long> tallies;
  for (const auto& ctx : contexts) {
    out.instances += ctx.instances_;
    out.failure_count += ctx.failure_count_;
    for (const auto& f : ctx.failures_)
      if (out.failures.size() < 64) out.failures.push_back(f);
    for (const auto& [k, v] : ctx.tallies_) tallies[k] += v;
  }
  std::sort(out.failures.begin(), out.failures.end());
  out.tallies.assign(tallies.begin(), tallies.end());
  return out;
}

}  // namespace mrsk
