#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "s3nf/estimates.hpp"
#include "s3nf/io.hpp"

namespace s3nf::cli {

enum ExitCode : int { kSuccess = 0, kInternalFailure = 1, kInvalidConfig = 2, kVerificationFailure = 3 };

struct RunConfig {
  std::string command;
  int max_degree = 8;
  int time_samples = 64;
  std::uint64_t seed = 1;
  int trials = 20;
  EstimateParams params;
  std::optional<double> alpha, beta;  // series triple, with params.beta0
  std::optional<double> epsilon;
  std::string output;
  std::string format = "json";
  std::optional<double> tolerance;
  bool no_meta = false;
  std::string f0 = "gaussian", f1 = "gaussian:width=0.8,amplitude=0.5";
  std::string g0 = "gaussian:width=1.3,amplitude=-0.7", g1 = "gaussian:width=0.6";
};

/// Resolved configuration as echoed in reports; `output` excluded.
Json config_json(const RunConfig& cfg);
/// Overlays keys of a JSON object; throws std::invalid_argument on unknown keys or bad types.
/// Keys listed in `locked` (set on the command line) are left untouched.
void apply_config_json(RunConfig& cfg, const Json& j, const std::vector<std::string>& locked = {});
/// Range checks; throws std::invalid_argument.
void validate(const RunConfig& cfg);

std::string sha256_hex(const std::string& data);

/// "name" or "name:key=value,key=value" for the registry, "csv:path[:interpolation]" for samples.
RadialProfile parse_profile(const std::string& spec);

struct Outcome {
  Json result;
  CsvTable table;
  bool verified = true;
};

Outcome execute(const RunConfig& cfg);

/// Full command-line entry point. Reports go to `out`, error JSON to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace s3nf::cli
