#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "wpgeom/catalog.hpp"
#include "wpgeom/verify.hpp"

namespace wpgeom {

/// Canonical suite names, in execution and report order.
const std::vector<std::string>& all_suites();

/// A fully parsed run request.
struct RunConfig {
  nlohmann::json echo;  // the raw config, replayed into the report
  CatalogEntry entry;
  SampleSpec samples;
  std::vector<std::string> suites;
  VerifyOptions options;
  std::string out_dir = ".";
  std::string format = "json";  // "json" or "csv"
};

/// Parses and validates a config document. Unknown keys, suite names or
/// malformed values raise ConfigError naming the offending key.
RunConfig parse_run_config(const nlohmann::json& j);

/// Convenience: the default full-suite config for a catalog entry.
RunConfig default_config(const CatalogEntry& entry);

struct RunResult {
  std::vector<ClaimReport> claims;
  ScanResult scan;
  bool all_pass = false;
  nlohmann::ordered_json report;  // machine-readable document
  std::string summary;            // plain-text table
  int exit_status = 1;
};

/// Executes the selected suites over the scanned sample set and assembles
/// both report forms. Does not touch the filesystem.
RunResult run_suites(const RunConfig& config);

/// run_suites plus report emission under config.out_dir:
/// report.json (or report.csv) and summary.txt. Returns the run result with
/// exit_status 0 iff every asserted claim passed.
RunResult run_suite_to_files(const RunConfig& config);

/// Serializations (exposed for the determinism tests).
nlohmann::ordered_json report_document(const RunConfig& config,
                                       const RunResult& result);
std::string report_csv(const RunResult& result);

}  // namespace wpgeom
