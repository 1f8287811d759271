#pragma once

// Reproduction and property checks over the reference grid.

#include <string>
#include <string_view>
#include <vector>

namespace ghwlab::verify {

enum class Status { Pass, Fail, ExpectedDiscrepancy };
std::string_view to_string(Status status) noexcept;

struct CheckResult {
  std::string id;
  std::string title;
  Status status = Status::Fail;
  std::string detail;
  double seconds = 0;
};

enum class Suite { Core, Extended };
/// Accepts "core" and "extended".
Suite parse_suite(std::string_view text);

/// Check ids in run order: core is 1-7, 10 and "grid"; extended adds 8, 9, 11.
std::vector<std::string> check_ids(Suite suite);
/// Runs one check; exceptions become a FAIL with the message as detail.
CheckResult run_check(std::string_view id, unsigned threads = 1);
std::vector<CheckResult> run_suite(Suite suite, unsigned threads = 1);

/// True unless some check has status Fail.
bool passed(const std::vector<CheckResult>& results);
std::string format_table(const std::vector<CheckResult>& results);

}  // namespace ghwlab::verify
