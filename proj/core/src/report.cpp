#include "icelab/report.hpp"

namespace icelab {

std::string_view to_string(Status status) noexcept {
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "unknown";
}

CheckReport combine_reports(std::string check_id, const std::vector<CheckReport>& parts) {
  CheckReport r;
  r.check_id = std::move(check_id);
  r.status = parts.empty() ? Status::Skipped : Status::Pass;
  const CheckReport* shown = parts.empty() ? nullptr : &parts.back();
  for (const auto& p : parts) {
    if (p.status == Status::Fail) {
      r.status = Status::Fail;
      shown = &p;
      break;
    }
  }
  if (shown != nullptr) {
    r.lhs = shown->lhs;
    r.rhs = shown->rhs;
    r.discrepancy = shown->discrepancy;
    r.backend = shown->backend;
    r.error = shown->error;
    if (shown->check_id != r.check_id && !shown->check_id.empty()) r.param("part", shown->check_id);
  }
  return r;
}

CheckReport error_report(std::string check_id, const std::exception& e) {
  CheckReport r;
  r.check_id = std::move(check_id);
  r.status = Status::Fail;
  r.error = e.what();
  return r;
}

}  // namespace icelab
