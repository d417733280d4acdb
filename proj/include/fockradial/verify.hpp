#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fockradial {

/// One measured quantity of a check and the bound it must respect.
struct Measurement {
  std::string label;
  double value = 0.0;
  double bound = 0.0;
  /// true: value must be >= bound; false: value must be <= bound.
  bool lower_bound = false;

  bool pass() const { return lower_bound ? value >= bound : value <= bound; }
};

struct CheckResult {
  std::string name;
  std::string summary;
  std::vector<Measurement> measurements;

  bool pass() const;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool pass() const;
};

/// Names accepted by run_verification's filter, in execution order.
const std::vector<std::string>& verification_check_names();

/// Runs the desk-scale verification suite. An empty filter runs every check;
/// unknown names throw ArgumentError. Output depends only on seed and filter.
VerificationReport run_verification(std::uint64_t seed, const std::vector<std::string>& filter = {});

/// Fixed-width pass/fail table, one row per measurement.
std::string format_report(const VerificationReport& report);

} // namespace fockradial
