#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "critideals/polyring.hpp"
#include "critideals/report.hpp"

namespace critideals {

struct SuiteOptions {
  int max_n = 6;
  std::uint64_t seed = 1;
  CompletionBudget budget = CompletionBudget::from_environment();
};

struct SuiteSummary {
  std::size_t records = 0;
  std::size_t failures = 0;
  std::size_t findings = 0;
};

using RecordSink = std::function<void(const ReportRecord&)>;

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs one suite, handing each record to sink in (tree id, j, check) order. Status is
/// "pass", "fail" (a stated property was violated) or "finding" (open conjecture, recorded data).
/// Throws InputError for unknown suites and ResourceLimit when a cap is hit.
SuiteSummary run_suite(const std::string& name, const SuiteOptions& options, const RecordSink& sink);

}  // namespace critideals
