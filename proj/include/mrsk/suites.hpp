#pragma once

#include <string>
#include <vector>

#include "mrsk/enumerate.hpp"

namespace mrsk {

struct SuiteReport {
  std::string name;
  std::string parameters;
  bool assertion_suite = true;  // false: conjecture scan, failures impossible
  long long instances = 0;
  long long failure_count = 0;
  std::vector<std::string> failures;  // sorted reproducers, capped
  std::vector<std::pair<std::string, long long>> tallies;
  long long millis = 0;

  bool passed() const { return failure_count == 0; }
  std::string summary() const;
  std::string json() const;
};

// Registered suite names with one-line descriptions.
std::vector<std::pair<std::string, std::string>> suite_catalog();

// Runs one suite over the spec (suites with pinned parameters ignore parts
// of it); throws on unknown names.
SuiteReport run_suite(const std::string& name, const EnumSpec& spec, int jobs = 1);

}  // namespace mrsk
