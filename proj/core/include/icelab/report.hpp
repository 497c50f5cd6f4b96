#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icelab/algebra/scalar.hpp"

namespace icelab {

enum class Status { Pass, Fail, Skipped };

std::string_view to_string(Status status) noexcept;

/// Outcome of one identity verification.
struct CheckReport {
  std::string check_id;
  std::vector<std::pair<std::string, std::string>> params;
  Status status = Status::Skipped;
  std::string lhs;
  std::string rhs;
  /// "0" for an exact match, otherwise the exact difference (exact backend)
  /// or the relative error (float backend).
  std::string discrepancy;
  std::string backend;
  std::optional<std::string> error;
  double elapsed_ms = 0;

  bool passed() const noexcept { return status == Status::Pass; }
  CheckReport& param(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

/// Relative tolerance used for float comparisons, expressed at 53 bits and
/// scaled to the working precision.
inline constexpr double kDefaultTolerance = 1e-8;
/// Tighter bound for the trigonometric parametrization checks.
inline constexpr double kTrigTolerance = 1e-9;

/// Exact backend: pass iff lhs == rhs. Float backend: pass iff the relative
/// error is within the scaled tolerance.
template <class F>
CheckReport compare_values(std::string check_id, const F& lhs, const F& rhs, double tolerance = kDefaultTolerance) {
  CheckReport r;
  r.check_id = std::move(check_id);
  r.lhs = render(lhs);
  r.rhs = render(rhs);
  r.backend = FieldTraits<F>::name;
  if constexpr (is_exact_v<F>) {
    F diff = lhs - rhs;
    r.discrepancy = render(diff);
    r.status = is_zero(diff) ? Status::Pass : Status::Fail;
  } else {
    F err = relative_error(lhs, rhs);
    r.discrepancy = err.str(3, std::ios_base::scientific);
    r.status = err <= scaled_tolerance(tolerance) ? Status::Pass : Status::Fail;
  }
  return r;
}

/// Merges a sequence of sub-comparisons: fails if any fails, keeps the
/// first failing (or the last) pair of values.
CheckReport combine_reports(std::string check_id, const std::vector<CheckReport>& parts);

/// Turns an exception escaping a check into a fail report.
CheckReport error_report(std::string check_id, const std::exception& e);

}  // namespace icelab
