#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace bergman {

struct CheckRecord {
  std::string name;
  nlohmann::json inputs;
  double estimate = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::string summary;  ///< one line, e.g. "bell: 60/60 points pass (max residual 3.2e-12)"
  std::vector<CheckRecord> checks;
  bool pass() const;
};

/// Names accepted by run_suite ("all" is handled by run_suites).
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed);
/// "all" expands to every suite.
std::vector<SuiteReport> run_suites(const std::string& name, std::uint64_t seed);

nlohmann::json report_to_json(const std::vector<SuiteReport>& reports);

}  // namespace bergman
