#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hyperfuzzy::testkit {

/// One law or theorem checked over `trials` seeded instances.
struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string first_counterexample;  ///< empty when nothing failed

  bool passed() const { return failures == 0; }
};

/// Suite groups accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs a suite group (or "all"). Trial t of every check draws from a
/// generator seeded with seed + t, so results are reproducible byte for
/// byte. Throws UsageError for an unknown name.
std::vector<SuiteResult> run_suite(std::string_view name, std::uint64_t seed, std::size_t trials);

}  // namespace hyperfuzzy::testkit
