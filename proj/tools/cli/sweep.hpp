#ifndef CUSPGROUP_CLI_SWEEP_HPP
#define CUSPGROUP_CLI_SWEEP_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cuspgroup::cli {

struct SweepCheck {
  long checked = 0;
  long failed = 0;
  std::vector<std::string> samples;  // first few failures
};

struct SweepSummary {
  std::int64_t max_n = 0;
  long data = 0;
  std::map<std::string, SweepCheck> checks;

  bool ok() const;
};

/// Every invariant of the library for 1 <= N <= max_n. The degeneracy
/// image checks run for N p <= max(200, max_n); eigenform checks for N <= 60.
SweepSummary run_sweep(std::int64_t max_n);

}  // namespace cuspgroup::cli

#endif  // CUSPGROUP_CLI_SWEEP_HPP
