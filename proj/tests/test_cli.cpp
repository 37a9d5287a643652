#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hyperlat/plane.hpp"

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(HYPERLAT_VERIFY_BIN) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run("") == 2);
  CHECK(run("nonsense") == 2);
  CHECK(run("allcock --format yaml") == 2);
  CHECK(run("allcock --threads 0") == 2);
  CHECK(run("allcock --plane-fixture does-not-exist.json") == 2);
  CHECK(run("allcock --out /nonexistent-dir/report.json") == 2);
  CHECK(run("--help") == 0);
}

TEST_CASE("exit status follows the checks") {
  CHECK(run("allcock --out cli-allcock.json") == 0);
  CHECK(run("e7 --out cli-e7.json") == 1);
  CHECK(run("fano --format markdown --out cli-fano.md") == 0);
  CHECK(slurp("cli-fano.md").find("| fano.duality | pass |") != std::string::npos);
}

TEST_CASE("a corrupted plane fixture fails the plane checks") {
  auto j = hyperlat::plane_to_json(hyperlat::build_plane(2));
  j["flags"].erase(j["flags"].begin());
  std::ofstream("cli-bad-fano.json") << j.dump();
  CHECK(run("fano --plane-fixture cli-bad-fano.json --out cli-bad.json") == 1);
  const auto report = nlohmann::json::parse(slurp("cli-bad.json"));
  CHECK(report["results"][0]["check_id"] == "fano.plane_axioms");
  CHECK(report["results"][0]["status"] == "fail");

  // a fixture of an unsupported order is a usage error
  std::ofstream("cli-bad-order.json") << nlohmann::json{{"order", 5}}.dump();
  CHECK(run("fano --plane-fixture cli-bad-order.json") == 2);
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
  CHECK(run("fano --out cli-a.json") == 0);
  CHECK(run("fano --threads 4 --out cli-b.json") == 0);
  CHECK(run("fano --out cli-c.json --cache-dir cli-cache") == 0);
  CHECK(run("fano --out cli-d.json --cache-dir cli-cache") == 0);
  const std::string a = slurp("cli-a.json");
  CHECK(!a.empty());
  CHECK(a == slurp("cli-b.json"));
  CHECK(a == slurp("cli-c.json"));
  CHECK(a == slurp("cli-d.json"));
  CHECK(run("e7 --out cli-e.json") == 1);
  CHECK(slurp("cli-e.json") == slurp("cli-e7.json"));
}
