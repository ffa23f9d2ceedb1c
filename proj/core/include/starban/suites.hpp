#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace starban::suites {

struct SuiteConfig {
  std::size_t max_dim = 5;
  std::uint64_t seed = 0;
  std::size_t samples = 120;
  unsigned threads = 1;
};

struct CheckResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;  // at most 10 retained
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t max_dim = 0;
  std::size_t samples = 0;
  std::vector<CheckResult> checks;

  std::size_t total_checks() const;
  std::size_t total_failures() const;
  bool passed() const { return total_failures() == 0; }
};

SuiteReport run_spaces_suite(const SuiteConfig& config);
SuiteReport run_bancat_suite(const SuiteConfig& config);
SuiteReport run_completion_suite(const SuiteConfig& config);
SuiteReport run_posreal_suite(const SuiteConfig& config);
SuiteReport run_convolution_suite(const SuiteConfig& config);

// Valid names: spaces, bancat, completion, posreal, convolution, all.
// "all" returns the five reports in the order above; unknown names throw
// std::invalid_argument.
std::vector<SuiteReport> run_suites(const std::string& name,
                                    const SuiteConfig& config);

}  // namespace starban::suites
