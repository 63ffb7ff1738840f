#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matreg/families.hpp"
#include "matreg/regularity.hpp"

namespace matreg {

struct Finding {
  std::string id;
  std::string claim;
  std::string expected;
  std::string observed;
  std::string witness;
};

struct SuiteResult {
  std::string suite;
  long long instances = 0;
  long long passes = 0;
  /// Items outside the suite's hypotheses (not counted as instances).
  long long skipped = 0;
  std::vector<Finding> findings;
  /// Informational lines, e.g. how often a bound was attained.
  std::vector<std::string> notes;
  /// Per-instance machine rows; column names in `columns`.
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  bool all_pass() const { return findings.empty() && passes == instances; }
};

struct SuiteOptions {
  std::vector<int> t_values{1, 2, 3};
  std::vector<int> primes{2};
  /// Randomized trials per identity in degree_lemmas.
  int samples = 200;
  std::uint64_t seed = 1;
  SearchOptions search;
  long long box_cap = 300'000;
};

struct SuiteInput {
  std::vector<NamedMatroid> matroids;
  /// Used by nashwilliams.
  std::vector<Graph> graphs;
};

const std::vector<std::string>& suite_names();

/// Throws UnknownSuite.
SuiteResult run_suite(const std::string& name, const SuiteInput& input, const SuiteOptions& options);

/// One line per finding, then a summary line.
std::string format_report(const SuiteResult& r);
/// Tab-separated rows (with a header line) or, for suites without rows, the findings.
std::string format_tsv(const SuiteResult& r);

}  // namespace matreg
