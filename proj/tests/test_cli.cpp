#include <doctest.h>

#include <cstdio>
#include <set>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(STABRES_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(STABRES_DATA_DIR) + "/" + name; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("resolve emits the rank sequence") {
  RunResult r = run_cli("resolve " + data("m2.ideal") + " --json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["format"] == 1);
  CHECK(j["ranks"] == json({1, 6, 8, 3}));
  CHECK(j["differentials"].size() == 3);

  // the JSON ideal input format yields the same resolution
  RunResult rj = run_cli("resolve " + data("m2.json") + " --json");
  REQUIRE(rj.exit_code == 0);
  CHECK(json::parse(rj.output)["ranks"] == json({1, 6, 8, 3}));
}

TEST_CASE("check reports stability") {
  RunResult r = run_cli("check " + data("principal.ideal"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("stable") != std::string::npos);

  r = run_cli("check " + data("nonstable.ideal"));
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("a^2") != std::string::npos);
}

TEST_CASE("resolve rejects a non-stable ideal with a witness") {
  RunResult r = run_cli("resolve " + data("nonstable.ideal"));
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("not stable") != std::string::npos);
  CHECK(r.output.find("a^2") != std::string::npos);
}

TEST_CASE("malformed input names the offending line") {
  const std::string path = "/tmp/stabres_cli_bad.ideal";
  {
    FILE* f = fopen(path.c_str(), "w");
    REQUIRE(f);
    fputs("vars: a b\na^2\nz*q\n", f);
    fclose(f);
  }
  RunResult r = run_cli("resolve " + path);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("line 3") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("verify runs the full suite") {
  RunResult r = run_cli("verify " + data("m2.ideal") + " --depth full --json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["pass"] == true);
  std::set<std::string> names;
  for (const auto& rep : j["reports"]) {
    CHECK(rep["pass"] == true);
    names.insert(rep["name"].get<std::string>());
  }
  for (const char* expect :
       {"stability", "el-shelling", "diamond", "sphere", "cycle", "cone-coefficient",
        "differential-identity", "complex", "minimality", "exactness", "betti-oracle",
        "cellular", "subcomplex-acyclicity"})
    CHECK(names.count(expect) == 1);
}

TEST_CASE("verify output is byte-stable") {
  RunResult a = run_cli("verify " + data("square.ideal") + " --depth exhaustive --seed 4 --json");
  RunResult b = run_cli("verify " + data("square.ideal") + " --depth exhaustive --seed 4 --json");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("hasse and cw exports") {
  RunResult dot = run_cli("hasse " + data("square.ideal"));
  CHECK(dot.exit_code == 0);
  CHECK(dot.output.find("digraph hasse") != std::string::npos);

  RunResult hj = run_cli("hasse " + data("square.ideal") + " --json");
  CHECK(json::parse(hj.output)["nodes"].size() == 6);

  RunResult cw = run_cli("cw " + data("m2.ideal") + " --format json");
  json j = json::parse(cw.output);
  CHECK(j["cells"].size() == 18);

  RunResult bad = run_cli("cw " + data("m2.ideal") + " --format svg");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("betti diagram") {
  RunResult r = run_cli("betti " + data("m2.ideal"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("total: 1 6 8 3") != std::string::npos);

  RunResult j = run_cli("betti " + data("principal.ideal") + " --json");
  json b = json::parse(j.output);
  CHECK(b["total"].size() == 2);
}

TEST_CASE("oracle at a single degree and over the box") {
  RunResult r = run_cli("oracle " + data("m2.ideal") + " --degree 1,1,1 --json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["betti"] == json({0, 0, 2, 0}));

  RunResult box = run_cli("oracle " + data("m2.ideal"));
  CHECK(box.exit_code == 0);
  CHECK(box.output.find("pass") != std::string::npos);

  RunResult bad = run_cli("oracle " + data("m2.ideal") + " --degree 1,1");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("corpus command verifies a small batch") {
  RunResult r = run_cli("corpus --seed 3 --count 4 --depth quick --json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["pass"] == true);
  CHECK(j["count"] == 4);
}

TEST_CASE("prime environment override is honored") {
  RunResult r = run_cli("verify " + data("square.ideal") + " --depth quick");
  CHECK(r.exit_code == 0);
  const std::string cmd =
      "STABLE_RESOLVE_PRIME=10007 " + std::string(STABRES_CLI_PATH) + " verify " +
      data("square.ideal") + " --depth quick 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 0);

  // an invalid prime is rejected up front
  RunResult bad = run_cli("verify " + data("square.ideal") + " --prime 9");
  CHECK(bad.exit_code == 1);
}

}  // TEST_SUITE
