// Acceptance runner: one line per criterion, nonzero exit on any failure.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "mrsk/suites.hpp"

using namespace mrsk;

namespace {

int failures = 0;

void report(int number, const std::string& label, const std::vector<SuiteReport>& reps) {
  bool ok = true;
  long long instances = 0, millis = 0;
  for (const auto& r : reps) {
    ok = ok && r.passed();
    instances += r.instances;
    millis += r.millis;
  }
  std::printf("%s criterion %2d: %s (%lld instances, %lld ms)\n", ok ? "PASS" : "FAIL",
              number, label.c_str(), instances, millis);
  for (const auto& r : reps)
    for (const auto& f : r.failures) std::printf("    %s: %s\n", r.name.c_str(), f.c_str());
  if (!ok) ++failures;
}

void report_scan(int number, const std::string& label, const std::vector<SuiteReport>& reps) {
  long long millis = 0;
  for (const auto& r : reps) millis += r.millis;
  std::printf("PASS criterion %2d: %s (report-only, %lld ms)\n", number, label.c_str(),
              millis);
  for (const auto& r : reps) {
    std::printf("    %s [%s]\n", r.name.c_str(), r.parameters.c_str());
    for (const auto& [k, v] : r.tallies) std::printf("      %s = %lld\n", k.c_str(), v);
  }
}

}  // namespace

int main(int argc, char** argv) {
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  if (argc > 1) jobs = std::max(1, std::atoi(argv[1]));

  const EnumSpec desk{.lo = 1, .hi = 4, .max_segments = 5};
  const EnumSpec desk4{.lo = 1, .hi = 4, .max_segments = 4};
  const EnumSpec desk3{.lo = 1, .hi = 4, .max_segments = 3};
  const EnumSpec enhanced{.lo = 1, .hi = 3, .max_segments = 3, .dummy_budget = 2};
  const EnumSpec dummies4{.lo = 1, .hi = 3, .max_segments = 3, .dummy_budget = 4};
  const EnumSpec enhanced_small{.lo = 1, .hi = 3, .max_segments = 3, .dummy_budget = 1};
  const EnumSpec words{.lo = 1, .hi = 6, .max_segments = 6};
  const EnumSpec window3{.lo = 1, .hi = 3, .max_segments = 3};

  report(1, "pinned worked examples, bit-exact", {run_suite("golden", desk, 1)});

  report(2, "involution squares to the identity",
         {run_suite("mw-involution", desk, jobs)});

  report(3, "extraction/inverse bijection",
         {run_suite("k-bijection", desk, jobs), run_suite("k-bijection-pairs", desk4, jobs)});

  report(4, "extraction commutes with the truncation step",
         {run_suite("commutation", desk, jobs),
          run_suite("commutation-enhanced", enhanced, jobs)});

  report(5, "socle recursion inverts the extraction",
         {run_suite("socle-main", desk, jobs), run_suite("socle-pairs", desk3, jobs)});

  report(6, "socle identity over enhanced inputs",
         {run_suite("socle-enhanced", enhanced, jobs)});

  report(7, "interpolation between the two standard products",
         {run_suite("interpolation", dummies4, jobs)});

  report(8, "flagged tuples are exactly the key-ordered tuples",
         {run_suite("key-characterization", words, jobs)});

  report(9, "tableau-side step matches the word-side step",
         {run_suite("gl-step", words, jobs)});

  report(10, "graded transition determinants are unimodular",
         {run_suite("drs-basis", desk, jobs)});

  report(11, "independent oracles agree",
         {run_suite("oracle-rsk", desk, jobs),
          run_suite("oracle-rsk", enhanced_small, jobs),
          run_suite("oracle-bruhat", desk, jobs), run_suite("oracle-knuth", desk, jobs),
          run_suite("permissibility-oracle", desk3, jobs),
          run_suite("saturated-image", desk4, jobs)});

  report_scan(12, "conjecture scans",
              {run_suite("conj-left-chain", desk3, jobs),
               run_suite("conj-lowest-ladder", desk4, jobs),
               run_suite("scan-schuetzenberger", window3, jobs),
               run_suite("scan-depth-remark", desk, jobs),
               run_suite("scan-tableau-order", window3, jobs)});

  if (failures) {
    std::printf("%d criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
