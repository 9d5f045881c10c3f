#include "mrsk/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mrsk/mw.hpp"
#include "mrsk/oracles.hpp"
#include "mrsk/ring.hpp"
#include "mrsk/rsk.hpp"
#include "mrsk/socle.hpp"
#include "mrsk/tableaux.hpp"
#include "mrsk/words.hpp"

namespace mrsk {

std::string SuiteReport::summary() const {
  std::ostringstream os;
  os << name << ": " << instances << " instances, ";
  if (assertion_suite)
    os << failure_count << " failures";
  else
    os << "report-only";
  os << " (" << millis << " ms; " << parameters << ")";
  for (const auto& [k, v] : tallies) os << "\n  " << k << " = " << v;
  for (const auto& f : failures) os << "\n  FAIL " << f;
  return os.str();
}

std::string SuiteReport::json() const {
  nlohmann::json j;
  j["suite"] = name;
  j["parameters"] = parameters;
  j["assertion_suite"] = assertion_suite;
  j["instances"] = instances;
  j["failures"] = failure_count;
  j["failure_samples"] = failures;
  nlohmann::json t = nlohmann::json::object();
  for (const auto& [k, v] : tallies) t[k] = v;
  j["tallies"] = t;
  j["millis"] = millis;
  return j.dump();
}

namespace {

using Clock = std::chrono::steady_clock;

// Chunked deterministic map over a materialized list.  A throwing check is a
// failing check.
template <typename T, typename Fn>
ShardedRun over_list(const std::vector<T>& items, int jobs, Fn&& fn) {
  const std::size_t chunk = 256;
  const std::size_t shards = (items.size() + chunk - 1) / chunk;
  return run_sharded(std::max<std::size_t>(shards, 1), jobs,
                     [&](std::size_t t, ShardContext& ctx) {
                       const std::size_t begin = t * chunk;
                       const std::size_t end = std::min(items.size(), begin + chunk);
                       for (std::size_t i = begin; i < end; ++i) {
                         ctx.item();
                         try {
                           fn(items[i], ctx);
                         } catch (const std::exception& e) {
                           ctx.fail(std::string("exception: ") + e.what());
                         }
                       }
                     });
}

void finish(SuiteReport& rep, const ShardedRun& run, Clock::time_point t0) {
  rep.instances = run.instances;
  rep.failure_count = run.failure_count;
  rep.failures = run.failures;
  rep.tallies = run.tallies;
  rep.millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

Multisegment ms(const std::string& text) { return Multisegment::parse(text); }

// ---------------------------------------------------------------- golden --

void golden_examples(ShardContext& ctx) {
  auto expect = [&](bool ok, const std::string& what) {
    ctx.item();
    if (!ok) ctx.fail("golden: " + what);
  };

  // Extraction of the running two-segment example and the non-image triple.
  expect(tuple_str(rsk(ms("[1,3]+[2,2]"))) == "([2,3]; [1,2])",
         "rsk [1,3]+[2,2]");
  LadderTuple bad{Ladder({Segment::genuine(3, 3), Segment::genuine(1, 2)}),
                  Ladder::single(Segment::genuine(2, 3)),
                  Ladder::single(Segment::genuine(1, 2))};
  expect(!in_image(bad), "non-image triple accepted");
  expect(in_image({Ladder::single(Segment::genuine(2, 3)),
                   Ladder::single(Segment::genuine(1, 2))}),
         "image pair rejected");

  // Word-tuple running example.
  RowTuple u({{1}, {1, 2}, {1, 2, 2}, {2, 3, 3}, {3, 4}, {5, 6}});
  auto [p, q] = crsk(u);
  expect(p == Tableau({{1, 1, 1, 2}, {2, 2, 2}, {3, 3, 3}, {4, 6}, {5}}), "crsk P");
  expect(q == Tableau({{1, 2, 3, 3}, {2, 3, 4}, {4, 4, 5}, {5, 6}, {6}}), "crsk Q");

  WordsMwResult step = mw_words(u);
  expect(step.khat == 2, "khat");
  expect(step.k == 5, "k");
  expect(step.diagonal_removed == RowTuple({{}, {1}, {1, 2, 2}, {2, 3, 3}, {3, 4}, {5, 6}}),
         "diagonal removal");
  expect(step.dagger == RowTuple({{}, {1}, {1, 2, 2}, {2, 3, 4}, {3, 5}, {6, 6}}),
         "word step");
  expect(step.delta_circ == Segment::genuine(1, 5), "word step segment");

  auto [pd, qd] = gl_step(p, q);
  expect(pd == Tableau({{1, 1, 2}, {2, 2, 4}, {3, 3}, {5, 6}, {6}}), "tableau step P");
  expect(qd == Tableau({{2, 3, 3}, {3, 4, 4}, {4, 5}, {5, 6}, {6}}), "tableau step Q");
  auto [pw, qw] = crsk(step.dagger);
  expect(pd == pw && qd == qw, "tableau step agrees with word step");

  KeyData kp = keys(p, 6), kq = keys(q, 6);
  expect(kp.right_key == Tableau({{1, 1, 1, 2}, {2, 2, 2}, {3, 3, 3}, {4, 6}, {6}}),
         "right key");
  expect(kq.left_key == Tableau({{1, 1, 1, 2}, {2, 2, 2}, {4, 4, 4}, {5, 6}, {6}}),
         "left key");
  expect(kp.right_weight == std::vector<int>({3, 4, 3, 1, 0, 2}), "right key weight");
  expect(kq.left_weight == std::vector<int>({3, 4, 0, 3, 1, 2}), "left key weight");
  expect(sorting_permutation(kp.right_weight) == std::vector<int>({1, 0, 2, 5, 3, 4}),
         "shortest sorting word, right");
  expect(permutation_length(sorting_permutation(kp.right_weight)) == 3, "length 3");
  expect(sorting_permutation(kq.left_weight) == std::vector<int>({1, 0, 3, 5, 4, 2}),
         "shortest sorting word, left");
  expect(permutation_length(sorting_permutation(kq.left_weight)) == 5, "length 5");
  expect(bruhat_leq(kp.right_weight, kq.left_weight), "key weights compare");
}

// ------------------------------------------------------------ mw suites --

void check_involution(const Multisegment& m, ShardContext& ctx) {
  if (m.empty() || m.has_dummies()) return;
  const Multisegment once = mw_involution(m);
  if (!(mw_involution(once) == m)) ctx.fail("mw-involution: " + m.str());
}

void check_mw_properties(const Multisegment& m, ShardContext& ctx) {
  if (m.empty() || m.has_dummies()) return;

  // Ladders stay ladders.
  if (is_ladder(m.entries()) && !is_ladder(mw_involution(m).entries()))
    ctx.fail("ladder-preservation: " + m.str());

  // Conjugation by reflection commutes with the involution.
  if (!(mw_involution(m.contragredient()) == mw_involution(m).contragredient()))
    ctx.fail("contragredient-compat: " + m.str());

  // Genuine part of the enhanced step matches the plain step.
  MwStepResult plain = mw_step(m);
  MwStepResult enhanced = mw_step_enhanced(m);
  if (!(enhanced.dagger.genuine_part() == plain.dagger) ||
      !(enhanced.delta_circ == plain.delta_circ))
    ctx.fail("enhanced-compat: " + m.str());

  // Dual step is the conjugated step.
  MwStepResult dual = mw_step_dual(m);
  MwStepResult conj = mw_step(m.contragredient());
  if (!(dual.dagger == conj.dagger.contragredient()) ||
      !(dual.delta_circ == conj.delta_circ.contragredient()))
    ctx.fail("dual-step: " + m.str());

  // The greedy chain equals the exhaustive search for it.
  std::vector<Segment> greedy;
  for (auto i : plain.leading) greedy.push_back(m.entries()[i]);
  if (greedy != oracles::leading_chain_values(m)) ctx.fail("leading-chain: " + m.str());

  if (!is_nondegenerate(m)) return;

  // Depth comparison across one step, with index alignment kept by hand.
  const auto& segs = m.entries();
  std::vector<Segment> star(segs.begin(), segs.end());
  std::vector<bool> leading(segs.size(), false);
  for (auto i : plain.leading) leading[i] = true;
  for (std::size_t i = 0; i < segs.size(); ++i)
    if (leading[i]) star[i] = *segs[i].behead();  // nondegenerate: never empty

  DepthTable before = depth_table(std::span<const Segment>(segs));
  DepthTable after = depth_table(std::span<const Segment>(star));

  if (before.max_depth != after.max_depth) ctx.fail("depth-max: " + m.str());

  std::set<int> leading_depths;
  for (auto i : plain.leading)
    if (!leading_depths.insert(before.depth[i]).second)
      ctx.fail("depth-injective-on-chain: " + m.str());

  for (std::size_t i = 0; i < segs.size(); ++i) {
    const int d0 = before.depth[i], d1 = after.depth[i];
    if (!(d0 <= d1 && d1 <= d0 + 1)) {
      ctx.fail("depth-sandwich: " + m.str());
      continue;
    }
    bool in_flat = false;
    for (auto ip : plain.leading)
      if (segs[ip].begin() == segs[i].begin() && contained(segs[i], segs[ip]) &&
          !(segs[i] == segs[ip]) && before.depth[ip] == before.depth[i] && !leading[i])
        in_flat = true;
    if ((d1 == d0 + 1) != in_flat) ctx.fail("depth-increment-set: " + m.str());
  }
}

// ------------------------------------------------------------ rsk suites --

void check_k_bijection(const Multisegment& m, ShardContext& ctx) {
  if (m.empty() || m.has_dummies()) return;
  KStep s = k_step(m);
  Multisegment back = k_inverse(s.ladder, s.derived);  // verifies internally
  if (!(back == m)) ctx.fail("k-inverse: " + m.str());
}

void check_rsk_properties(const Multisegment& m, ShardContext& ctx) {
  if (m.empty()) return;
  const auto& segs = m.entries();
  DepthTable t = depth_table(std::span<const Segment>(segs));

  // Depths below the chain are realized.
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (int k = 0; k < t.depth[i]; ++k) {
      bool found = false;
      for (std::size_t j = 0; j < segs.size(); ++j)
        if (t.depth[j] == k && precedes(segs[i], segs[j])) found = true;
      if (!found) ctx.fail("depth-realized: " + m.str());
    }

  // Sandwiched deeper segments see a same-depth successor inside the sandwich.
  for (std::size_t i1 = 0; i1 < segs.size(); ++i1)
    for (std::size_t i2 = 0; i2 < segs.size(); ++i2) {
      if (t.depth[i1] != t.depth[i2] || !contained(segs[i2], segs[i1])) continue;
      for (std::size_t i = 0; i < segs.size(); ++i) {
        if (t.depth[i] <= t.depth[i1]) continue;
        if (!contained(segs[i], segs[i1]) || !contained(segs[i2], segs[i])) continue;
        bool witness = false;
        for (std::size_t j = 0; j < segs.size(); ++j)
          if (t.depth[j] == t.depth[i1] && contained(segs[j], segs[i1]) &&
              contained(segs[i2], segs[j]) && precedes(segs[i], segs[j]))
            witness = true;
        if (!witness) ctx.fail("sandwich-witness: " + m.str());
      }
    }

  // Strict containment between a fiber member and its successor forces a
  // strictly smaller depth.
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Segment inner = segs[t.sigma[i]];
    if (inner == segs[i]) continue;
    for (std::size_t r = 0; r < segs.size(); ++r) {
      if (contained(inner, segs[r]) && contained(segs[r], segs[i]) && !(segs[r] == inner) &&
          !(segs[r] == segs[i]) && t.depth[r] >= t.depth[i])
        ctx.fail("containment-depth: " + m.str());
    }
  }

  KStep s = k_step(m);

  // Derived depths never grow.
  if (!s.derived.empty()) {
    std::vector<Segment> derived_aligned;
    std::vector<int> old_depth;
    std::vector<bool> taken(segs.size(), false);
    for (auto i : s.ladder_indices) taken[i] = true;
    for (std::size_t i = 0; i < segs.size(); ++i)
      if (!taken[i]) {
        derived_aligned.push_back(s.transformed[i]);
        old_depth.push_back(t.depth[i]);
      }
    DepthTable td = depth_table(std::span<const Segment>(derived_aligned));
    for (std::size_t i = 0; i < derived_aligned.size(); ++i)
      if (td.depth[i] > old_depth[i]) ctx.fail("derived-depth: " + m.str());
  }

  // Ladder extraction realizes the fiber maxima.
  for (std::size_t k = 0; k < s.ladder.size(); ++k) {
    int maxb = segs[t.fibers[k][0]].begin(), maxe = segs[t.fibers[k][0]].end();
    for (auto i : t.fibers[k]) {
      maxb = std::max(maxb, segs[i].begin());
      maxe = std::max(maxe, segs[i].end());
    }
    if (s.ladder.segments()[k].begin() != maxb || s.ladder.segments()[k].end() != maxe)
      ctx.fail("ladder-maxima: " + m.str());
  }

  // Full recursion: pairwise permissibility for plain inputs, consecutive
  // dominance once dummies are present; width matches either way.
  LadderTuple tuple = rsk(m);
  if (m.has_dummies()) {
    if (!is_dominant_tuple(tuple)) ctx.fail("image-dominant: " + m.str());
  } else if (!is_permissible_tuple(tuple)) {
    ctx.fail("image-permissible: " + m.str());
  }
  if (width(m) != static_cast<int>(tuple.size())) ctx.fail("width: " + m.str());

  // Inductive step when the extraction respects the minimum.
  if (!m.has_dummies() && s.ladder.segments().back().begin() == m.min_begin()) {
    const int d = t.max_depth;
    Multisegment deepest;
    for (auto i : t.fibers[d]) deepest.add(segs[i]);
    const Segment top = segs[t.fibers[d][0]];
    for (auto i : t.fibers[d])
      if (segs[i].begin() != m.min_begin() || !contained(segs[i], top))
        ctx.fail("inductive-fiber: " + m.str());
    // ... and the fiber is exactly the lowest-starting segments under top.
    for (std::size_t i = 0; i < segs.size(); ++i)
      if (segs[i].begin() == m.min_begin() && contained(segs[i], top) &&
          t.depth[i] != d)
        ctx.fail("inductive-fiber-converse: " + m.str());
    Multisegment reduced = m - deepest;
    if (!reduced.empty()) {
      KStep s2 = k_step(reduced);
      Multisegment l1 = s.ladder.as_multisegment();
      l1.remove_one(top);
      Multisegment d1 = s.derived;
      Multisegment rest = deepest;
      rest.remove_one(top);
      d1 -= rest;
      if (!(s2.ladder.as_multisegment() == l1) || !(s2.derived == d1))
        ctx.fail("inductive-step: " + m.str());
    }
  }
}

void check_commutation(const Multisegment& m, ShardContext& ctx) {
  if (m.empty() || m.has_dummies()) return;
  KStep s = k_step(m);
  const Segment low = s.ladder.segments().back();
  if (low.is_dummy()) return;
  if (!(m.min_begin() < low.begin())) return;

  MwStepResult step = mw_step(m);
  KStep after = k_step(step.dagger);
  if (!(after.ladder == s.ladder)) ctx.fail("commutation-ladder: " + m.str());
  if (s.derived.empty()) {
    ctx.fail("commutation-empty-derived: " + m.str());
    return;
  }
  MwStepResult inner = mw_step(s.derived);
  if (!(inner.delta_circ == step.delta_circ)) ctx.fail("commutation-circ: " + m.str());
  if (!(after.derived == inner.dagger)) ctx.fail("commutation-derived: " + m.str());
}

void check_commutation_enhanced(const Multisegment& m, ShardContext& ctx) {
  if (m.genuine_part().empty()) return;
  KStep s = k_step(m);
  auto low = Ladder(s.ladder).genuine_part();
  if (!low) return;
  if (!(m.min_begin() < low->as_multisegment().min_begin())) return;

  MwStepResult step = mw_step_enhanced(m);
  KStep after = k_step(step.dagger);
  if (!(after.ladder == s.ladder)) ctx.fail("commutation-enh-ladder: " + m.str());
  if (s.derived.genuine_part().empty()) {
    ctx.fail("commutation-enh-empty-derived: " + m.str());
    return;
  }
  MwStepResult inner = mw_step_enhanced(s.derived);
  if (!(inner.delta_circ == step.delta_circ)) ctx.fail("commutation-enh-circ: " + m.str());
  if (!(after.derived == inner.dagger)) ctx.fail("commutation-enh-derived: " + m.str());
}

// ---------------------------------------------------------- socle suites --

void check_socle_main(const Multisegment& m, ShardContext& ctx) {
  if (m.empty() || m.has_dummies()) return;
  KStep s = k_step(m);
  if (!(socle(s.derived, s.ladder) == m)) ctx.fail("socle-step: " + m.str());
  if (!(socle_chain(rsk(m)) == m)) ctx.fail("socle-chain: " + m.str());
}

void check_socle_enhanced(const Multisegment& m, ShardContext& ctx) {
  if (m.genuine_part().empty()) return;
  KStep s = k_step(m);
  if (!(socle(s.derived, s.ladder) == m.genuine_part()))
    ctx.fail("socle-enhanced: " + m.str());
  if (!(socle_chain(rsk(m)) == m.genuine_part()))
    ctx.fail("socle-chain-enhanced: " + m.str());
}

void check_interpolation(const Multisegment& genuine, const Multisegment& dummies,
                         ShardContext& ctx) {
  InterpolationReport rep = interpolation_check(genuine, dummies);
  if (rep.mismatch)
    ctx.fail("interpolation: " + genuine.str() + " with " + dummies.str());
  ctx.tally(rep.zeta_hypothesis ? "zeta-hypothesis" : "no-zeta-hypothesis");
  ctx.tally(rep.langlands_hypothesis ? "langlands-hypothesis" : "no-langlands-hypothesis");
  switch (rep.cls) {
    case InterpolationClass::ZelevinskyMatch: ctx.tally("zelevinsky-match"); break;
    case InterpolationClass::LanglandsMatch: ctx.tally("langlands-match"); break;
    case InterpolationClass::Neither: ctx.tally("neither"); break;
  }
}

// ---------------------------------------------------------- words suites --

void check_key_characterization(const RowTuple& u, ShardContext& ctx) {
  if (is_flagged(u) != key_condition(u)) ctx.fail("key-characterization: " + u.str());
  if (is_flagged_enhanced(u) != key_condition_enhanced(u))
    ctx.fail("key-characterization-enhanced: " + u.str());
}

void check_gl_step(const RowTuple& u, ShardContext& ctx) {
  if (u.empty()) return;
  auto [p, q] = crsk(u);
  WordsMwResult step = mw_words(u);
  auto [pw, qw] = crsk(step.dagger);

  std::pair<Tableau, Tableau> direct;
  try {
    direct = gl_step(p, q);
  } catch (const std::exception& e) {
    ctx.fail("gl-step threw on " + u.str() + ": " + e.what());
    return;
  }
  if (!(direct.first == pw) || !(direct.second == qw)) {
    ctx.fail("gl-step: " + u.str());
    return;
  }
  // Strip clause: the recording tableau loses a vertical strip of the
  // diagonal run's length.
  const Shape inner = direct.second.empty() ? Shape{} : direct.second.shape();
  if (!is_vertical_strip(p.shape(), inner) ||
      p.shape().size() - inner.size() != static_cast<long long>(step.khat))
    ctx.fail("gl-step-strip: " + u.str());

  // The removed-chain length is read off the first column of the insertion
  // tableau.
  const int m0 = p.min_entry();
  int run = 0;
  {
    std::set<int> first_col;
    for (const auto& row : p.rows()) first_col.insert(row[0]);
    while (first_col.count(m0 + run)) ++run;
  }
  if (run != step.k) ctx.fail("gl-step-k: " + u.str());
}

// ----------------------------------------------------------- scan suites --

void scan_left_chain(const Multisegment& m, ShardContext& ctx) {
  if (m.genuine_part().empty()) return;
  if (socle_chain(rsk(m), SocleSide::Left) == m.genuine_part())
    ctx.tally("left-chain-match");
  else
    ctx.tally("left-chain-mismatch");
}

void scan_lowest_ladder(const Multisegment& m, ShardContext& ctx) {
  if (m.empty()) return;
  LadderTuple t = rsk(m);
  if (t.size() < 2) {
    ctx.tally("prefix-trivial");
    return;
  }
  LadderTuple prefix(t.begin(), t.end() - 1);
  if (in_image(prefix))
    ctx.tally("prefix-invertible");
  else
    ctx.tally("prefix-not-invertible");
}

void scan_schuetzenberger(const Multisegment& m, ShardContext& ctx) {
  if (m.empty() || m.has_dummies()) return;
  if (schuetzenberger_relation_check(m))
    ctx.tally("evacuation-agrees");
  else
    ctx.tally("evacuation-differs");
}

void scan_depth_remark(const Multisegment& m, ShardContext& ctx) {
  if (m.empty() || m.has_dummies() || !is_nondegenerate(m)) return;
  MwStepResult step = mw_step(m);
  DepthTable t = depth_table(m);
  for (std::size_t r = 1; r < step.leading.size(); ++r) {
    if (t.depth[step.leading[r - 1]] == t.depth[step.leading[r]] + 1)
      ctx.tally("chain-depth-steps-by-one");
    else
      ctx.tally("chain-depth-jumps");
  }
}

// ------------------------------------------------------------- registry --

struct SuiteDef {
  std::string name;
  std::string description;
  bool assertion = true;
  std::function<SuiteReport(const EnumSpec&, int)> run;
};

SuiteReport enum_suite(const std::string& name, const EnumSpec& spec, int jobs,
                       const std::function<void(const Multisegment&, ShardContext&)>& body,
                       bool assertion = true) {
  SuiteReport rep;
  rep.name = name;
  rep.parameters = spec.str();
  rep.assertion_suite = assertion;
  const auto t0 = Clock::now();
  auto items = enumerate_multisegments(spec);
  finish(rep, over_list(items, jobs, body), t0);
  return rep;
}

std::vector<SuiteDef> make_registry() {
  std::vector<SuiteDef> defs;

  defs.push_back({"golden", "fixed worked examples, bit-exact", true,
                  [](const EnumSpec&, int) {
                    SuiteReport rep;
                    rep.name = "golden";
                    rep.parameters = "pinned examples";
                    const auto t0 = Clock::now();
                    ShardedRun run = run_sharded(1, 1, [](std::size_t, ShardContext& ctx) {
                      golden_examples(ctx);
                    });
                    finish(rep, run, t0);
                    return rep;
                  }});

  defs.push_back({"mw-involution", "the truncation involution squares to the identity",
                  true, [](const EnumSpec& spec, int jobs) {
                    return enum_suite("mw-involution", spec, jobs, check_involution);
                  }});

  defs.push_back({"mw-step-injectivity", "one truncation step never collides", true,
                  [](const EnumSpec& spec, int) {
                    SuiteReport rep;
                    rep.name = "mw-step-injectivity";
                    rep.parameters = spec.str();
                    const auto t0 = Clock::now();
                    auto items = enumerate_multisegments(spec);
                    ShardedRun run = run_sharded(1, 1, [&](std::size_t, ShardContext& ctx) {
                      std::map<std::string, std::string> seen;
                      for (const auto& m : items) {
                        if (m.empty() || m.has_dummies()) continue;
                        ctx.item();
                        MwStepResult s = mw_step(m);
                        const std::string key =
                            s.dagger.str() + " | " + s.delta_circ.str();
                        auto [it, fresh] = seen.emplace(key, m.str());
                        if (!fresh) ctx.fail("collision: " + it->second + " vs " + m.str());
                      }
                    });
                    finish(rep, run, t0);
                    return rep;
                  }});

  defs.push_back({"mw-properties",
                  "chain uniqueness, conjugations, depth behaviour across a step", true,
                  [](const EnumSpec& spec, int jobs) {
                    return enum_suite("mw-properties", spec, jobs, check_mw_properties);
                  }});

  defs.push_back({"k-bijection", "extraction step inverts on its image", true,
                  [](const EnumSpec& spec, int jobs) {
                    return enum_suite("k-bijection", spec, jobs, check_k_bijection);
                  }});

  defs.push_back(
      {"k-bijection-pairs", "inverse then step is the identity on permissible pairs", true,
       [](const EnumSpec& spec, int jobs) {
         SuiteReport rep;
         rep.name = "k-bijection-pairs";
         rep.parameters = spec.str();
         const auto t0 = Clock::now();
         auto ladders = enumerate_ladders(spec.lo, spec.hi, false);
         EnumSpec genuine_spec = spec;
         genuine_spec.dummy_budget = 0;
         auto multis = enumerate_multisegments(genuine_spec);
         ShardedRun run = over_list(ladders, jobs, [&](const Ladder& l, ShardContext& ctx) {
           for (const auto& m : multis) {
             if (!is_permissible_pair(l, m)) continue;
             ctx.tally("pairs");
             Multisegment built = k_inverse(l, m);
             KStep s = k_step(built);
             if (!(s.ladder == l) || !(s.derived == m))
               ctx.fail("pair: (" + l.str() + ", " + m.str() + ")");
           }
         });
         finish(rep, run, t0);
         return rep;
       }});

  defs.push_back({"commutation", "extraction commutes with the truncation step", true,
                  [](const EnumSpec& spec, int jobs) {
                    return enum_suite("commutation", spec, jobs, check_commutation);
                  }});

  defs.push_back({"commutation-enhanced", "same, dummies kept", true,
                  [](const EnumSpec& spec, int jobs) {
                    return enum_suite("commutation-enhanced", spec, jobs,
                                      check_commutation_enhanced);
                  }});

  defs.push_back({"rsk-properties", "depth lemmas, fiber maxima, width, induction", true,
                  [](const EnumSpec& spec, int jobs) {
                    return enum_suite("rsk-properties", spec, jobs, check_rsk_properties);
                  }});

  defs.push_back(
      {"permissibility-oracle", "maximal-chain test equals the all-chains test", true,
       [](const EnumSpec& spec, int jobs) {
         SuiteReport rep;
         rep.name = "permissibility-oracle";
         rep.parameters = spec.str();
         const auto t0 = Clock::now();
         auto ladders = enumerate_ladders(spec.lo, spec.hi, spec.dummy_budget > 0);
         auto multis = enumerate_multisegments(spec);
         ShardedRun run = over_list(ladders, jobs, [&](const Ladder& l, ShardContext& ctx) {
           for (const auto& m : multis)
             if (is_permissible_pair(l, m) != is_permissible_pair_exhaustive(l, m))
               ctx.fail("pair: (" + l.str() + ", " + m.str() + ")");
         });
         finish(rep, run, t0);
         return rep;
       }});

  defs.push_back(
      {"saturated-image", "image membership against saturation and the key test", true,
       [](const EnumSpec& spec, int jobs) {
         SuiteReport rep;
         rep.name = "saturated-image";
         rep.parameters = spec.str();
         const auto t0 = Clock::now();
         if (spec.lo < 1)
           throw std::invalid_argument("saturated-image: window must be positive");
         // Consecutively dominant tuples over the window.
         auto ladders = enumerate_ladders(spec.lo, spec.hi, false);
         std::vector<LadderTuple> tuples;
         std::function<void(LadderTuple&, int)> grow = [&](LadderTuple& cur,
                                                           int segments_left) {
           if (!cur.empty()) tuples.push_back(cur);
           for (std::size_t i = 0; i < ladders.size(); ++i) {
             const int sz = static_cast<int>(ladders[i].size());
             if (sz > segments_left) continue;
             if (!cur.empty() && !is_dominant(cur.back(), ladders[i])) continue;
             cur.push_back(ladders[i]);
             grow(cur, segments_left - sz);
             cur.pop_back();
           }
         };
         LadderTuple cur;
         grow(cur, spec.max_segments);
         ShardedRun run =
             over_list(tuples, jobs, [&](const LadderTuple& t, ShardContext& ctx) {
               int maxb = 0, mine = 0;
               bool first = true;
               for (const auto& l : t)
                 for (const auto& s : l.segments()) {
                   if (first) {
                     maxb = s.begin();
                     mine = s.end();
                     first = false;
                   }
                   maxb = std::max(maxb, s.begin());
                   mine = std::min(mine, s.end());
                 }
               const bool saturated = maxb <= mine;
               const bool image = in_image(t);
               if (saturated && !image)
                 ctx.fail("saturated non-image tuple: " + tuple_str(t));
               if (saturated) ctx.tally("saturated");
               ctx.tally(image ? "in-image" : "not-in-image");
               // Word-side detour: the tuple is an image exactly when the
               // matching row tuple is flagged, equivalently key-ordered.
               TableauPair pq = from_ladder_tuple(t);
               RowTuple u = crsk_inverse(inv_back(pq.p), inv_back(pq.q));
               if (is_flagged(u) != image)
                 ctx.fail("flag test vs image: " + tuple_str(t));
               if (key_condition(u) != image)
                 ctx.fail("key test vs image: " + tuple_str(t));
             });
         finish(rep, run, t0);
         return rep;
       }});

  defs.push_back({"socle-main", "socle recursion restores the extraction", true,
                  [](const EnumSpec& spec, int jobs) {
                    return enum_suite("socle-main", spec, jobs, check_socle_main);
                  }});

  defs.push_back(
      {"socle-pairs", "socle agrees with the inverse step on permissible pairs", true,
       [](const EnumSpec& spec, int jobs) {
         SuiteReport rep;
         rep.name = "socle-pairs";
         rep.parameters = spec.str();
         const auto t0 = Clock::now();
         auto ladders = enumerate_ladders(spec.lo, spec.hi, false);
         auto multis = enumerate_multisegments(spec);
         ShardedRun run = over_list(ladders, jobs, [&](const Ladder& l, ShardContext& ctx) {
           for (const auto& m : multis) {
             if (!is_permissible_pair(l, m)) continue;
             if (!(socle(m, l) == k_inverse(l, m)))
               ctx.fail("socle-pair: (" + l.str() + ", " + m.str() + ")");
           }
         });
         finish(rep, run, t0);
         return rep;
       }});

  defs.push_back({"socle-enhanced", "socle identity with dummies in play", true,
                  [](const EnumSpec& spec, int jobs) {
                    return enum_suite("socle-enhanced", spec, jobs, check_socle_enhanced);
                  }});

  defs.push_back(
      {"interpolation", "extreme dummy choices match the two standard products", true,
       [](const EnumSpec& spec, int jobs) {
         SuiteReport rep;
         rep.name = "interpolation";
         rep.parameters = spec.str();
         const auto t0 = Clock::now();
         EnumSpec genuine_spec = spec;
         genuine_spec.dummy_budget = 0;
         auto genuine = enumerate_multisegments(genuine_spec);
         std::vector<Multisegment> dummy_parts;
         {
           EnumSpec d = spec;
           d.max_segments = 0;
           for (const auto& m : enumerate_multisegments(d)) dummy_parts.push_back(m);
         }
         ShardedRun run =
             over_list(genuine, jobs, [&](const Multisegment& m, ShardContext& ctx) {
               if (m.empty()) return;
               for (const auto& d : dummy_parts) {
                 ctx.tally("pairs");
                 check_interpolation(m, d, ctx);
               }
             });
         finish(rep, run, t0);
         return rep;
       }});

  defs.push_back(
      {"key-characterization", "flagged tuples are exactly the key-ordered ones", true,
       [](const EnumSpec& spec, int jobs) {
         SuiteReport rep;
         rep.name = "key-characterization";
         const int bound = std::max(1, spec.hi);
         const int total = std::max(1, spec.max_segments);
         std::ostringstream ps;
         ps << "indices,values <= " << bound << ", total length <= " << total;
         rep.parameters = ps.str();
         const auto t0 = Clock::now();
         const std::size_t shards = row_tuple_shards(bound, bound);
         ShardedRun run = run_sharded(shards, jobs, [&](std::size_t t, ShardContext& ctx) {
           for_each_row_tuple_shard(bound, bound, total, t, [&](const RowTuple& u) {
             ctx.item();
             try {
               check_key_characterization(u, ctx);
             } catch (const std::exception& e) {
               ctx.fail("exception on " + u.str() + ": " + e.what());
             }
           });
         });
         finish(rep, run, t0);
         return rep;
       }});

  defs.push_back(
      {"gl-step", "tableau-side step matches the word-side step on flagged tuples", true,
       [](const EnumSpec& spec, int jobs) {
         SuiteReport rep;
         rep.name = "gl-step";
         const int bound = std::max(1, spec.hi);
         const int total = std::max(1, spec.max_segments);
         std::ostringstream ps;
         ps << "flagged tuples, indices <= " << bound << ", total length <= " << total;
         rep.parameters = ps.str();
         const auto t0 = Clock::now();
         const std::size_t shards = row_tuple_shards(bound, bound);
         ShardedRun run = run_sharded(shards, jobs, [&](std::size_t t, ShardContext& ctx) {
           for_each_row_tuple_shard(bound, bound, total, t, [&](const RowTuple& u) {
             if (!is_flagged(u)) return;
             ctx.item();
             try {
               check_gl_step(u, ctx);
             } catch (const std::exception& e) {
               ctx.fail("exception on " + u.str() + ": " + e.what());
             }
           });
         });
         finish(rep, run, t0);
         return rep;
       }});

  defs.push_back(
      {"drs-basis", "graded transition determinants are +-1 on saturated slices", true,
       [](const EnumSpec&, int jobs) {
         SuiteReport rep;
         rep.name = "drs-basis";
         rep.parameters = "pinned saturated endpoint families, sizes 1..6";
         const auto t0 = Clock::now();
         struct Family {
           std::vector<int> as, bs;
         };
         std::vector<Family> families = {{{1}, {1}},
                                         {{1, 2}, {2, 3}},
                                         {{1, 3}, {3, 4}},
                                         {{0, 1}, {1, 2, 3}},
                                         {{1, 2, 3}, {3, 4, 5}}};
         ShardedRun run = over_list(families, jobs, [&](const Family& f, ShardContext& ctx) {
           for (long long size = 1; size <= 6; ++size) {
             DrsReport r = drs_basis_check(f.as, f.bs, size);
             ctx.tally("blocks", static_cast<long long>(r.blocks.size()));
             if (!r.all_unimodular) {
               std::ostringstream os;
               os << "family a={";
               for (int a : f.as) os << a << " ";
               os << "} b={";
               for (int b : f.bs) os << b << " ";
               os << "} size " << size;
               ctx.fail(os.str());
             }
           }
         });
         finish(rep, run, t0);
         return rep;
       }});

  defs.push_back({"oracle-rsk", "extraction equals cell-by-cell bumping", true,
                  [](const EnumSpec& spec, int jobs) {
                    return enum_suite("oracle-rsk", spec, jobs,
                                      [](const Multisegment& m, ShardContext& ctx) {
                                        if (m.empty()) return;
                                        TableauPair a = from_ladder_tuple(rsk(m));
                                        TableauPair b = oracles::rsk_by_insertion(m);
                                        if (!(a == b)) ctx.fail("oracle-rsk: " + m.str());
                                      });
                  }});

  defs.push_back(
      {"oracle-bruhat", "prefix criterion equals the subword test", true,
       [](const EnumSpec&, int jobs) {
         SuiteReport rep;
         rep.name = "oracle-bruhat";
         rep.parameters = "all permutation pairs, n <= 5";
         const auto t0 = Clock::now();
         std::vector<std::vector<int>> perms;
         for (int n = 1; n <= 5; ++n) {
           std::vector<int> p(static_cast<std::size_t>(n));
           for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
           do {
             perms.push_back(p);
           } while (std::next_permutation(p.begin(), p.end()));
         }
         ShardedRun run =
             over_list(perms, jobs, [&](const std::vector<int>& u, ShardContext& ctx) {
               for (const auto& w : perms) {
                 if (u.size() != w.size()) continue;
                 if (bruhat_leq_permutations(u, w) != oracles::bruhat_leq_subword(u, w)) {
                   std::ostringstream os;
                   os << "perms";
                   for (int x : u) os << " " << x;
                   os << " vs";
                   for (int x : w) os << " " << x;
                   ctx.fail(os.str());
                 }
               }
             });
         finish(rep, run, t0);
         return rep;
       }});

  defs.push_back(
      {"oracle-knuth", "every class has one tableau word and one antitableau word", true,
       [](const EnumSpec&, int jobs) {
         SuiteReport rep;
         rep.name = "oracle-knuth";
         rep.parameters = "alphabet {1..4}, lengths <= 7";
         const auto t0 = Clock::now();
         std::vector<Word> seeds;
         std::function<void(Word&)> gen = [&](Word& w) {
           if (!w.empty()) seeds.push_back(w);
           if (w.size() == 7) return;
           for (int v = 1; v <= 4; ++v) {
             w.push_back(v);
             gen(w);
             w.pop_back();
           }
         };
         Word w;
         gen(w);
         ShardedRun run = over_list(seeds, jobs, [&](const Word& seed, ShardContext& ctx) {
           // Only canonical representatives walk their class.
           auto cls = oracles::knuth_class(seed);
           if (*cls.begin() != seed) return;
           std::size_t tableau_words = 0, anti_words = 0;
           Word tab, anti;
           for (const auto& x : cls) {
             if (oracles::is_tableau_word(x)) {
               ++tableau_words;
               tab = x;
             }
             if (oracles::is_antitableau_word(x)) {
               ++anti_words;
               anti = x;
             }
           }
           std::ostringstream os;
           for (int v : seed) os << v;
           if (tableau_words != 1 || anti_words != 1) {
             ctx.fail("class counts for " + os.str());
             return;
           }
           Tableau t = p_tableau(seed);
           if (t.word() != tab) ctx.fail("insertion vs class for " + os.str());
           if (antitableau(t).word() != anti)
             ctx.fail("antinormal form vs class for " + os.str());
         });
         finish(rep, run, t0);
         return rep;
       }});

  defs.push_back({"conj-left-chain", "left-sided chain scan", false,
                  [](const EnumSpec& spec, int jobs) {
                    return enum_suite("conj-left-chain", spec, jobs, scan_left_chain, false);
                  }});

  defs.push_back({"conj-lowest-ladder", "prefix invertibility scan", false,
                  [](const EnumSpec& spec, int jobs) {
                    return enum_suite("conj-lowest-ladder", spec, jobs, scan_lowest_ladder,
                                      false);
                  }});

  defs.push_back({"scan-schuetzenberger", "reflection versus evacuation scan", false,
                  [](const EnumSpec& spec, int jobs) {
                    return enum_suite("scan-schuetzenberger", spec, jobs,
                                      scan_schuetzenberger, false);
                  }});

  defs.push_back({"scan-depth-remark", "depth steps along the greedy chain", false,
                  [](const EnumSpec& spec, int jobs) {
                    return enum_suite("scan-depth-remark", spec, jobs, scan_depth_remark,
                                      false);
                  }});

  defs.push_back(
      {"scan-tableau-order", "restriction-order antisymmetry tallies", false,
       [](const EnumSpec& spec, int jobs) {
         SuiteReport rep;
         rep.name = "scan-tableau-order";
         rep.parameters = "fillings of multisets from " + spec.str();
         rep.assertion_suite = false;
         const auto t0 = Clock::now();
         // All inverted tableaux over entry multisets drawn from the window,
         // size <= 5.
         std::vector<std::vector<int>> multisets;
         std::function<void(int, std::vector<int>&)> pick = [&](int from,
                                                                std::vector<int>& cur) {
           if (!cur.empty()) multisets.push_back(cur);
           if (cur.size() == 5) return;
           for (int v = from; v <= spec.hi; ++v) {
             cur.push_back(v);
             pick(v, cur);
             cur.pop_back();
           }
         };
         std::vector<int> cur;
         pick(spec.lo, cur);
         ShardedRun run = over_list(
             multisets, jobs, [&](const std::vector<int>& entries, ShardContext& ctx) {
               std::set<std::vector<std::vector<int>>> seen;
               std::vector<InvertedTableau> fillings;
               std::function<void(std::vector<std::vector<int>>&, std::vector<int>&)> build =
                   [&](std::vector<std::vector<int>>& rows, std::vector<int>& rest) {
                     if (rest.empty()) {
                       try {
                         InvertedTableau filled(rows);
                         if (seen.insert(rows).second)
                           fillings.push_back(std::move(filled));
                       } catch (const std::invalid_argument&) {
                       }
                       return;
                     }
                     // place the largest remaining entry at the end of any row
                     // or a new row
                     int v = rest.back();
                     rest.pop_back();
                     for (std::size_t r = 0; r <= rows.size(); ++r) {
                       if (r == rows.size()) {
                         rows.push_back({v});
                         build(rows, rest);
                         rows.pop_back();
                       } else {
                         rows[r].push_back(v);
                         bool plausible = rows[r].size() < 2 ||
                                          rows[r][rows[r].size() - 2] > v;
                         if (plausible) build(rows, rest);
                         rows[r].pop_back();
                       }
                     }
                     rest.push_back(v);
                   };
               std::vector<std::vector<int>> rows;
               std::vector<int> rest = entries;  // ascending; we take from the back
               build(rows, rest);
               for (const auto& a : fillings)
                 for (const auto& b : fillings) {
                   ctx.item();
                   const bool ab = tableau_leq(a, b), ba = tableau_leq(b, a);
                   if (ab && ba && !(a == b))
                     ctx.tally("antisymmetry-violations");
                   else if (ab && ba)
                     ctx.tally("equal");
                   else if (ab || ba)
                     ctx.tally("strictly-comparable");
                   else
                     ctx.tally("incomparable");
                 }
             });
         finish(rep, run, t0);
         return rep;
       }});

  return defs;
}

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs = make_registry();
  return defs;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> suite_catalog() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& d : registry()) out.push_back({d.name, d.description});
  return out;
}

SuiteReport run_suite(const std::string& name, const EnumSpec& spec, int jobs) {
  for (const auto& d : registry())
    if (d.name == name) {
      SuiteReport rep = d.run(spec, jobs);
      rep.assertion_suite = d.assertion;
      return rep;
    }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace mrsk
