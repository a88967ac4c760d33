#pragma once

// Named verification suites with their default grids. Every randomly sampled
// parameter comes from the suite seed, so a suite is a pure function of its
// name and options.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsk/verifier.hpp"

namespace qsk {

struct SuiteOptions {
  std::uint64_t seed = 42;
  TruncationPolicy pol;
  /// Overrides the suite's partial-sum length (expansion suites only).
  std::optional<int> n_terms;
  /// Overrides the suite's tolerance.
  std::optional<double> tol_rel;
};

struct SuiteResult {
  std::string suite;
  VerificationReport report;
  nlohmann::ordered_json params;
  nlohmann::ordered_json grid;
  double wall_time_ms = 0.0;
};

/// Every suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Resolves "all" and rejects unknown names (DomainViolation).
std::vector<std::string> expand_suites(const std::vector<std::string>& names);

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace qsk
