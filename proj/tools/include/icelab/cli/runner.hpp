#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "icelab/cli/config.hpp"
#include "icelab/report.hpp"

namespace icelab::cli {

struct SuiteReport {
  Suite suite;
  CheckReport report;
};

/// Every check of one suite, ordered by check id and then draw.
std::vector<CheckReport> run_suite(Suite suite, const SuiteConfig& config);

/// All selected suites in canonical order.
std::vector<SuiteReport> run(const SuiteConfig& config);

/// Flat JSON array; elapsed_ms only when config.timings is set.
std::string to_json(const std::vector<SuiteReport>& reports, const SuiteConfig& config);

/// Suite, #pass, #fail, #skipped.
void print_summary(std::ostream& out, const std::vector<SuiteReport>& reports, const SuiteConfig& config);

/// 0 iff no report failed.
int exit_code(const std::vector<SuiteReport>& reports);

}  // namespace icelab::cli
