#pragma once

#include "superweyl/export.hpp"
#include "superweyl/json_io.hpp"
#include "superweyl/realizations.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace superweyl {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  int window = 3;
  int depth = 6;
  int tau_floor = kDefaultTauFloor;
  GaussianRational mu = GaussianRational::fraction(1, 2);
  std::optional<int> N;
  std::optional<Algebra> algebra;
  std::string out;
  TableFormat format = TableFormat::Json;
};

const std::vector<std::string>& command_names();

/// Throws UsageError when the configuration cannot be run.
void validate(const RunConfig& config);

struct Report {
  std::string command;
  Json document;         // {"command", "config", "checks", "passed"} or an exported table
  std::string payload;   // exact output text
  bool passed = false;
  std::vector<std::string> summary;  // one human-readable line per check
};

/// Runs a validated configuration.
Report run_report(const RunConfig& config);

}  // namespace superweyl
