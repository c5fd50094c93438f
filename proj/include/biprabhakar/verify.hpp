#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "biprabhakar/special.hpp"

namespace biprab::verify {

struct SuiteOptions {
  /// Number of random draws; 0 selects the suite default.
  int draws = 0;
  std::uint64_t seed = 0;
  SeriesPolicy policy;
};

/// One property within a suite: the worst metric over all draws against its
/// tolerance.
struct Check {
  std::string name;
  int count = 0;
  double worst = 0.0;
  double tolerance = 0.0;
  /// Reported for comparison only; never fails the suite.
  bool informational = false;
  bool passed = true;
};

struct SuiteReport {
  std::string suite;
  int draws = 0;
  std::uint64_t seed = 0;
  bool passed = true;
  std::vector<Check> checks;
  /// First few failing draws, with parameters and the error message.
  std::vector<std::string> failures;
  /// Wall time; not part of the JSON report.
  double seconds = 0.0;

  const Check* find(const std::string& name) const;
};

/// Suite names in execution order (excluding "all").
const std::vector<std::string>& suite_names();
int default_draws(const std::string& suite);

/// Runs one suite. Throws DomainError for an unknown name.
SuiteReport run_suite(const std::string& suite, const SuiteOptions& options = {});
/// "all" runs every suite; any other name runs that suite alone.
std::vector<SuiteReport> run(const std::string& suite, const SuiteOptions& options = {});

/// Deterministic JSON text (no timings).
std::string to_json(const SuiteReport& report);
std::string to_json(const std::vector<SuiteReport>& reports);

}  // namespace biprab::verify
