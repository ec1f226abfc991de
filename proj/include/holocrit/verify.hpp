#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace holocrit {

enum class VerifyLevel { exact, mc, all };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::exact;
  unsigned jobs = 1;
  std::uint64_t seed = 20240611;
  std::int64_t matrix_samples = 1'000'000;
  std::int64_t section_trials = 2000;
};

/// Exact identities (zero tolerance); mc adds the 3-sigma Monte Carlo
/// agreements with the exact engine; all adds the N <= 8 simulation suite
/// and a replay with one worker that must reproduce the reports byte for byte.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

std::vector<CheckResult> exact_checks();
std::vector<CheckResult> monte_carlo_checks(unsigned jobs, std::uint64_t seed,
                                            std::int64_t matrix_samples, std::int64_t section_trials);
std::vector<CheckResult> extended_checks(unsigned jobs, std::uint64_t seed, std::int64_t matrix_samples,
                                         std::int64_t section_trials);

}  // namespace holocrit
