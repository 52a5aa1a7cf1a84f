#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace paley {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;  // deterministic: never contains timings
};

/// bitops, dyadic, walsh, kernels, hardy, strong.
const std::vector<std::string>& verify_suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument for
/// an unknown name. Random inputs come from fixed seeds.
std::vector<CheckResult> run_verify_suite(const std::string& suite);

/// One "PASS|FAIL suite.name: detail" line per check, then a summary line.
void write_verify_report(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace paley
