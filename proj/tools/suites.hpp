#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rigidual/findual.hpp"
#include "rigidual/report.hpp"

namespace rigidual {

struct SuiteConfig {
  std::string ring_spec = "Z/6";
  int size = 4;  // index-set size ceiling
  std::uint64_t seed = 0;
  int cases = 20;
  std::uint64_t budget = kDefaultEnumerationBudget;
  bool inject_corrupt = false;
};

/// Registered suite names, in reporting order.
const std::vector<std::string>& suite_names();

/// Runs one named suite. Generated cases come first, then the built-in
/// negative controls (ids "control-*", which pass when the seeded corruption
/// is detected), then the injected corruption if requested (a genuine failing
/// case). Unknown names and inapplicable rings raise std::invalid_argument.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace rigidual
