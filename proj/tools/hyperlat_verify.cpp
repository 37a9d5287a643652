// Command line runner for the verification suites.
//
//   hyperlat_verify <fano|pg3|e7|allcock|all> [--format json|markdown]
//                   [--out PATH] [--cache-dir PATH] [--threads N]
//                   [--verbose] [--timing] [--plane-fixture PATH]
//
// Exit status: 0 when every check passes, 1 on any failure, 2 on usage error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperlat/verify.hpp"

int main(int argc, char** argv) {
  using namespace hyperlat;
  CLI::App app{"Exact verification suites for the hyperlat toolkit"};
  std::string suite, format = "json", out, cache_dir, fixture;
  SuiteOptions options;
  app.add_option("suite", suite, "Suite to run")->required()->check(CLI::IsMember(suite_names()));
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "markdown"}));
  app.add_option("--out", out, "Write the report here instead of stdout");
  app.add_option("--cache-dir", cache_dir, "Directory for vertex catalog caches");
  app.add_option("--threads", options.threads, "Worker threads for enumeration")->check(CLI::Range(1, 256));
  app.add_flag("--verbose", options.verbose, "Attach per-vertex certificates");
  app.add_flag("--timing", options.timing, "Record elapsed_ms (reports are then not reproducible)");
  app.add_option("--plane-fixture", fixture, "Plane JSON replacing the canonical plane of the same order");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!cache_dir.empty()) options.cache_dir = cache_dir;
  if (!fixture.empty()) {
    try {
      std::ifstream in(fixture);
      if (!in) throw std::runtime_error("cannot open " + fixture);
      ProjectivePlane plane = plane_from_json(nlohmann::json::parse(in));
      if (plane.order() == 2) options.plane2 = std::move(plane);
      else if (plane.order() == 3) options.plane3 = std::move(plane);
      else throw std::runtime_error("fixture plane must have order 2 or 3");
    } catch (const std::exception& e) {
      std::cerr << "hyperlat_verify: bad plane fixture: " << e.what() << "\n";
      return 2;
    }
  }

  const auto results = run_suite(suite, options);
  const std::string text = format == "json" ? report_json(suite, results).dump(2) + "\n" : report_markdown(suite, results);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out, std::ios::binary);
    if (!file) {
      std::cerr << "hyperlat_verify: cannot write " << out << "\n";
      return 2;
    }
    file << text;
  }
  if (options.verbose)
    for (const auto& r : results)
      if (r.status == CheckStatus::fail) std::cerr << "FAIL " << r.check_id << "\n";
  return all_passed(results) ? 0 : 1;
}
