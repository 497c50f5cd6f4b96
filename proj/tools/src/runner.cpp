#include <cmath>
#include <iomanip>
#include <ostream>

#include "icelab/cli/runner.hpp"
#include "json.hpp"

namespace icelab::cli {

std::vector<SuiteReport> run(const SuiteConfig& config) {
  validate(config);
  std::vector<SuiteReport> out;
  for (Suite suite : config.suites) {
    for (auto& report : run_suite(suite, config)) out.push_back({suite, std::move(report)});
  }
  return out;
}

std::string to_json(const std::vector<SuiteReport>& reports, const SuiteConfig& config) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const auto& [suite, r] : reports) {
    nlohmann::ordered_json item;
    item["suite"] = suite_name(suite);
    item["check_id"] = r.check_id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    item["params"] = std::move(params);
    item["status"] = to_string(r.status);
    item["lhs"] = r.lhs;
    item["rhs"] = r.rhs;
    item["discrepancy"] = r.discrepancy;
    item["backend"] = r.backend;
    if (r.error) item["error"] = *r.error;
    if (config.timings) item["elapsed_ms"] = static_cast<std::int64_t>(std::llround(r.elapsed_ms));
    array.push_back(std::move(item));
  }
  return array.dump(2) + "\n";
}

void print_summary(std::ostream& out, const std::vector<SuiteReport>& reports, const SuiteConfig& config) {
  out << std::left << std::setw(14) << "suite" << std::right << std::setw(8) << "pass" << std::setw(8) << "fail"
      << std::setw(10) << "skipped" << "\n";
  for (Suite suite : config.suites) {
    int counts[3] = {0, 0, 0};
    for (const auto& r : reports) {
      if (r.suite == suite) ++counts[static_cast<int>(r.report.status)];
    }
    out << std::left << std::setw(14) << suite_name(suite) << std::right << std::setw(8) << counts[0] << std::setw(8)
        << counts[1] << std::setw(10) << counts[2] << "\n";
  }
  for (const auto& [suite, r] : reports) {
    if (r.status != Status::Fail) continue;
    out << "FAIL " << r.check_id;
    for (const auto& [k, v] : r.params) out << " " << k << "=" << v;
    if (r.error) out << " error: " << *r.error;
    out << "\n";
  }
}

int exit_code(const std::vector<SuiteReport>& reports) {
  for (const auto& r : reports) {
    if (r.report.status == Status::Fail) return 1;
  }
  return 0;
}

}  // namespace icelab::cli
