#include <cstdlib>
#include <fstream>
#include <iostream>

#include "icelab/cli/runner.hpp"
#include "icelab/errors.hpp"

extern char** environ;

int main(int argc, char** argv) {
  using namespace icelab::cli;
  std::map<std::string, std::string> env;
  for (char** e = environ; *e != nullptr; ++e) {
    const std::string entry(*e);
    if (const auto eq = entry.find('='); eq != std::string::npos) env.emplace(entry.substr(0, eq), entry.substr(eq + 1));
  }

  SuiteConfig config;
  try {
    config = parse_config(std::vector<std::string>(argv + 1, argv + argc), env);
  } catch (const UsageError& e) {
    if (e.help_requested()) {
      std::cout << e.help();
      return 0;
    }
    std::cerr << "error: " << e.what() << "\n\n" << e.help();
    return 2;
  }

  std::vector<SuiteReport> reports;
  try {
    reports = run(config);
  } catch (const icelab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string json = to_json(reports, config);
  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file || !(file << json)) {
      std::cerr << "error: cannot write " << *config.output_path << "\n";
      return 2;
    }
  }
  print_summary(std::cout, reports, config);
  return exit_code(reports);
}
