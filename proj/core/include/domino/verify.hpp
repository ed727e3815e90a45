#pragma once

#include <string>
#include <vector>

#include "domino/exact.hpp"

namespace domino {

struct SuiteResult {
  std::string suite;
  int checked = 0;
  int failures = 0;
  std::vector<std::string> messages;  // one per failure

  bool ok() const { return failures == 0; }
};

/// Named invariant suites runnable from the CLI:
///   chain-validity        every shipped policy emits a valid chain
///   degree-bounds         packing lower bounds vs the exact optima
///   tds-prefix-connected  every valid TDS chain has connected prefixes
///   ids-uniqueness        exactly one valid IDS chain per sequence
///   thm1-bounds           the three transformations meet their bounds
///   layer-inequalities    first-parent per-layer counts vs layer sizes
std::vector<std::string> known_suites();
SuiteResult verify_suite(const std::string& name);

}  // namespace domino
