#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rigidual {

/// Outcome of a single law check; witness names the first failing coordinate
/// with expected/actual values.
struct CheckResult {
  bool ok = true;
  std::string witness;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string w) { return {false, std::move(w)}; }
  /// Keeps the first failure.
  void merge(const CheckResult& other) {
    if (ok && !other.ok) *this = other;
  }
};

struct CaseResult {
  std::string id;
  std::string law;
  bool passed = true;
  std::string witness;  // empty when irrelevant
};

/// Deterministic law-suite report; serialization lives in json_io.
struct SuiteReport {
  std::string suite;
  std::string ring_spec;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;

  bool all_passed() const {
    for (const auto& c : cases)
      if (!c.passed) return false;
    return true;
  }
};

}  // namespace rigidual
