#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prelie {

/// Inputs of a single check. `n` is the size of the instance: number of
/// factors for the combinatorial identities, truncation degree for the
/// series identities.
struct CheckParams {
  int n = 0;                  // 0 selects the check's quick size
  std::string model = "all";  // prop21 only: free, poly, seq, pole or all
  std::uint64_t seed = 0;
  int samples = 10;           // random instances where the check is sampled
};

struct CheckReport {
  std::string id;
  bool passed = true;
  /// Ordered key=value statistics, starting with the parameters.
  std::vector<std::pair<std::string, std::string>> fields;
  /// Inputs and both sides of the first failing instance, in the textual
  /// formats accepted by the CLI; empty on success.
  std::string counterexample;

  /// "PASS thm1 n=3 chains=5 tuples=8000"
  [[nodiscard]] std::string line() const;
};

class UnknownCheck : public std::invalid_argument {
 public:
  explicit UnknownCheck(const std::string& id) : std::invalid_argument("unknown check '" + id + "'") {}
};

class ParameterOutOfRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CheckInfo {
  std::string id;
  int min_n;
  int max_n;
  int quick_n;
  std::string summary;
};

/// The thirteen checks in suite order.
const std::vector<CheckInfo>& check_catalog();

/// Runs one check. Throws UnknownCheck or ParameterOutOfRange.
CheckReport verify(const std::string& id, const CheckParams& params);

enum class SuiteLevel { quick, full };

/// quick: every check once at its quick size. full: every check at every
/// supported size, with the sample counts of the acceptance runs.
std::vector<CheckReport> run_suite(SuiteLevel level, std::uint64_t seed);

}  // namespace prelie
