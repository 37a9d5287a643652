#pragma once

// Named check suites over all modules, with JSON and Markdown reports.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperlat/plane.hpp"

namespace hyperlat {

enum class CheckStatus { pass, fail, skipped };
std::string status_name(CheckStatus s);

struct CheckResult {
  std::string check_id;
  CheckStatus status = CheckStatus::skipped;
  nlohmann::json expected;
  nlohmann::json actual;
  long elapsed_ms = 0;
  nlohmann::json certificate;  // null when absent
};

struct SuiteOptions {
  int threads = 1;
  std::optional<std::filesystem::path> cache_dir;
  bool verbose = false;  // attach bulky certificates (per-vertex traces)
  bool timing = false;   // record elapsed_ms; otherwise 0 so reports are reproducible
  /// Replace the canonical plane of order 2 or 3 (read from JSON).
  std::optional<ProjectivePlane> plane2;
  std::optional<ProjectivePlane> plane3;
};

const std::vector<std::string>& suite_names();  // fano, pg3, e7, allcock, all

/// Checks of one suite in a fixed order. Throws std::invalid_argument for an
/// unknown suite name. Exceptions inside a check turn it into a failure.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& options = {});

nlohmann::json to_json(const CheckResult& r);
/// {suite, results, summary: {pass, fail, skipped}, toolkit_version}.
nlohmann::json report_json(const std::string& suite, const std::vector<CheckResult>& results);
/// Summary table plus the value table and the reduction table when present.
std::string report_markdown(const std::string& suite, const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace hyperlat
