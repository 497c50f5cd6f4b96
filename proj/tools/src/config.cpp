#include "icelab/cli/config.hpp"

#include <algorithm>
#include <charconv>

#include "CLI11.hpp"
#include "icelab/errors.hpp"

namespace icelab::cli {

namespace {

constexpr std::string_view kSuiteNames[] = {"partition", "boundary", "generating", "efp", "rcp", "antisym",
                                            "tracy-widom"};

std::uint64_t parse_seed(const std::string& text) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("seed must be an unsigned integer: " + text);
  }
  return value;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

WeightTriple parse_weights(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t pos; (pos = text.find(':', start)) != std::string::npos; start = pos + 1) {
    parts.push_back(text.substr(start, pos - start));
  }
  parts.push_back(text.substr(start));
  if (parts.size() != 3) throw std::invalid_argument("weights must look like a:b:c");
  return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
}

}  // namespace

std::string_view suite_name(Suite suite) noexcept { return kSuiteNames[static_cast<std::size_t>(suite)]; }

std::optional<Suite> parse_suite(std::string_view name) noexcept {
  for (std::size_t i = 0; i < std::size(kSuiteNames); ++i) {
    if (kSuiteNames[i] == name) return static_cast<Suite>(i);
  }
  return std::nullopt;
}

void validate(const SuiteConfig& config) {
  auto fail = [](const std::string& what) { raise(ErrorKind::ConfigError, what); };
  if (config.suites.empty()) fail("no suite selected");
  if (config.n_max < 1 || config.n_max > kMaxN) fail("n-max must lie in [1, " + std::to_string(kMaxN) + "]");
  const int s_cap = std::min(config.n_max, kMaxS);
  if (config.s_max < 1 || config.s_max > s_cap) fail("s-max must lie in [1, " + std::to_string(s_cap) + "]");
  if (config.draws < 1) fail("draws must be positive");
  if (config.precision_bits < 16) fail("precision must be at least 16 bits");
  if (!(config.tolerance > 0)) fail("tolerance must be positive");
}

SuiteConfig parse_config(const std::vector<std::string>& args, const std::map<std::string, std::string>& env) {
  CLI::App app{"Verification suites for the six-vertex model with domain wall boundary conditions", "icelab-verify"};
  std::vector<std::string> suites;
  SuiteConfig config;
  std::optional<int> s_max;
  std::optional<std::string> seed;
  std::string backend = "exact";
  std::optional<std::string> weights;
  std::optional<std::string> json;

  std::vector<std::string> choices(std::begin(kSuiteNames), std::end(kSuiteNames));
  choices.emplace_back("all");
  app.add_option("--suite", suites, "Suite to run (repeatable)")->check(CLI::IsMember(choices))->take_all();
  app.add_option("--n-max", config.n_max, "Largest lattice size")->capture_default_str();
  app.add_option("--s-max", s_max, "Largest number of integration variables (default min(4, n-max))");
  app.add_option("--draws", config.draws, "Random draws per check")->capture_default_str();
  app.add_option("--seed", seed, "PRNG seed (default: ICELAB_SEED, else 1)");
  app.add_option("--backend", backend, "exact or float")->check(CLI::IsMember({"exact", "float"}))->capture_default_str();
  app.add_option("--precision", config.precision_bits, "Float precision in bits")->capture_default_str();
  app.add_option("--tolerance", config.tolerance, "Relative tolerance at 53 bits (trigonometric checks use at most 1e-9)")->capture_default_str();
  app.add_option("--json", json, "Write the JSON report to this path");
  app.add_option("--weights", weights, "Fixed homogeneous weights a:b:c instead of random draws");
  app.add_flag("--timings", config.timings, "Include elapsed_ms in the JSON report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (suites.empty()) suites.push_back("all");
    for (const auto& name : suites) {
      if (name == "all") {
        config.suites.assign(std::begin(kAllSuites), std::end(kAllSuites));
        break;
      }
      const Suite suite = *parse_suite(name);
      if (std::find(config.suites.begin(), config.suites.end(), suite) == config.suites.end()) {
        config.suites.push_back(suite);
      }
    }
    std::sort(config.suites.begin(), config.suites.end());
    config.s_max = s_max.value_or(std::min({4, config.n_max, kMaxS}));
    if (seed) {
      config.seed = parse_seed(*seed);
    } else if (auto it = env.find("ICELAB_SEED"); it != env.end()) {
      config.seed = parse_seed(it->second);
    }
    config.backend = backend == "float" ? Backend::Float : Backend::Exact;
    if (weights) config.weights = parse_weights(*weights);
    config.output_path = json;
    validate(config);
  } catch (const CLI::CallForHelp&) {
    throw UsageError("help requested", app.help(), true);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what(), app.help());
  } catch (const std::exception& e) {
    throw UsageError(e.what(), app.help());
  }
  return config;
}

}  // namespace icelab::cli
