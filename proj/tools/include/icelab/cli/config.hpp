#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "icelab/algebra/scalar.hpp"

namespace icelab::cli {

enum class Suite { Partition, Boundary, Generating, Efp, Rcp, Antisym, TracyWidom };

inline constexpr Suite kAllSuites[] = {Suite::Partition, Suite::Boundary, Suite::Generating, Suite::Efp,
                                       Suite::Rcp,       Suite::Antisym,  Suite::TracyWidom};

std::string_view suite_name(Suite suite) noexcept;
std::optional<Suite> parse_suite(std::string_view name) noexcept;

enum class Backend { Exact, Float };

struct WeightTriple {
  Rational a, b, c;
};

struct SuiteConfig {
  std::vector<Suite> suites;  // canonical order, no duplicates
  int n_max = 5;
  int s_max = 4;
  int draws = 10;
  std::uint64_t seed = 1;
  Backend backend = Backend::Exact;
  int precision_bits = kDefaultPrecisionBits;
  double tolerance = 1e-8;
  std::optional<std::string> output_path;
  /// Replaces the random homogeneous weights by one fixed triple.
  std::optional<WeightTriple> weights;
  bool timings = false;
};

inline constexpr int kMaxN = 8;
inline constexpr int kMaxS = 6;

/// Bad flags or out-of-range values. `help` holds the usage text.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& what, std::string help, bool help_requested = false)
      : std::runtime_error(what), help_(std::move(help)), help_requested_(help_requested) {}
  const std::string& help() const noexcept { return help_; }
  bool help_requested() const noexcept { return help_requested_; }

 private:
  std::string help_;
  bool help_requested_;
};

/// Raises ConfigError when the ranges are inconsistent.
void validate(const SuiteConfig& config);

/// `args` excludes the program name. ICELAB_SEED in `env` supplies the seed
/// when --seed is absent.
SuiteConfig parse_config(const std::vector<std::string>& args, const std::map<std::string, std::string>& env);

}  // namespace icelab::cli
