#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monopole/io.hpp"

namespace monopole::cli {

enum ExitCode : int { kPass = 0, kVerificationFailed = 1, kConfigError = 2 };

struct RunConfig {
  std::string command;  // expand | verify | eval
  std::string target;   // verify: assoc kontsevich cocycle weakrep multiplier zassenhaus all; eval: kernel star
  int order = 2;
  bool mu_bind = false;
  std::string family = "acceptance";
  std::uint64_t seed = 0;
  int samples = 100;
  int configs = 10;
  std::vector<int> orders{1, 2};
  std::vector<double> hbars{0.1, 0.05, 0.025};
  double tolerance = 1e-10;
  double slope_margin = 0.3;
  int max_degree = 6;
  std::string point;  // JSON object for eval kernel
  std::string f;
  std::string g;
  std::string reference_path;  // empty: the bundled table
};

struct RunResult {
  int exit_code = kPass;
  io::json report;
};

/// Executes one command. Never throws; configuration problems come back as exit code 2
/// with an "error" object in the report.
RunResult run(const RunConfig& config);

/// Human-readable rendering of a report produced by run().
std::string render_text(const io::json& report);

}  // namespace monopole::cli
