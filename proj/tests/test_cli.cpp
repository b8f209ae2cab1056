// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end checks of the command-line binary. The binary path arrives as
// the first test argument (wired up by CMake); commands run through the
// shell so the piped examples exercise stdin handling too.

#define DOCTEST_CONFIG_IMPLEMENT
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "coalition/json_io.hpp"
#include "doctest.h"

namespace {

std::string g_cli;
std::string g_dir;  // scratch directory for instance files

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs `command` under /bin/sh with stderr discarded, capturing stdout.
RunResult run_shell(const std::string& command) {
  RunResult result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    result.out.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

RunResult run_cli(const std::string& args) { return run_shell(g_cli + " " + args); }

// Called both from main (before any test context exists) and from test
// bodies, so it must not use doctest assertions.
void write_file(const std::string& name, const std::string& text) {
  std::ofstream out(g_dir + "/" + name, std::ios::binary);
  if (!out.good()) std::abort();
  out << text;
}

std::string path(const std::string& name) { return g_dir + "/" + name; }

coalition::Json parse_report(const RunResult& result) {
  REQUIRE(result.exit_code == 0);
  return coalition::parse_json_text(result.out);
}

// The documented report shape: all six keys present.
void check_schema(const coalition::Json& report) {
  for (const char* key : {"value", "allocation", "method", "certificate", "guarantee",
                          "runtime_ms"})
    CHECK(report.contains(key));
}

std::string strip_runtime(const RunResult& result) {
  coalition::Json report = coalition::parse_json_text(result.out);
  report.erase("runtime_ms");
  return report.dump(2);
}

}  // namespace

TEST_CASE("core-check reports the nonemptiness verdict") {
  const coalition::Json report = parse_report(run_cli("core-check " + path("additive.json")));
  check_schema(report);
  CHECK(report.at("verdict") == "nonempty");
  CHECK(report.at("reason") == "additive");
  CHECK(report.at("allocation") == coalition::Json({1.0, 2.0, 3.0}));

  const coalition::Json empty = parse_report(run_cli("core-check " + path("fixture.json")));
  CHECK(empty.at("verdict") == "empty");
  CHECK(empty.at("reason") == "none");
}

TEST_CASE("least-core subcommands solve the hand fixture") {
  const coalition::Json rlcv = parse_report(run_cli("rlcv " + path("fixture.json")));
  check_schema(rlcv);
  CHECK(rlcv.at("value").get<double>() == doctest::Approx(0.25));
  CHECK(rlcv.at("method") == "exact");

  const coalition::Json cutgen =
      parse_report(run_cli("rlcv " + path("fixture.json") + " --method cutgen"));
  CHECK(cutgen.at("value").get<double>() == doctest::Approx(0.25));

  const coalition::Json alcv = parse_report(run_cli("alcv " + path("fixture.json")));
  CHECK(alcv.at("value").get<double>() == doctest::Approx(0.25));

  const coalition::Json approx =
      parse_report(run_cli("alcv " + path("fixture.json") + " --method approx --delta 0.05"));
  check_schema(approx);
  const double value = approx.at("value").get<double>();
  CHECK(value >= 0.25 - 1e-9);
  CHECK(value <= 0.75 + 1e-9);
  CHECK(approx.at("guarantee").is_string());
  CHECK_FALSE(approx.at("guarantee").get<std::string>().empty());

  const coalition::Json ladv = parse_report(run_cli("ladv " + path("fixture.json")));
  CHECK(ladv.at("value").get<double>() == doctest::Approx(0.125));
}

TEST_CASE("generated max-cut game pipes into the exact solver") {
  const coalition::Json report = parse_report(
      run_shell(g_cli + " gen maxcut " + path("k3.txt") + " | " + g_cli + " alcv --method exact"));
  check_schema(report);
  CHECK(report.at("value").get<double>() == doctest::Approx(2.0));
}

TEST_CASE("subgradient runs are reproducible and exact runs match the oracle") {
  const std::string cmd =
      "ladv " + path("fixture.json") + " --method sgd --T 3000 --seed 11 --theorem8";
  const RunResult first = run_cli(cmd);
  const RunResult second = run_cli(cmd);
  CHECK(strip_runtime(first) == strip_runtime(second));
  const coalition::Json report = parse_report(first);
  CHECK(report.at("certificate").at("theorem8") == true);
  CHECK(report.at("value").get<double>() >= 0.125 - 1e-12);

  const coalition::Json oracle = parse_report(run_cli("oracle ladv " + path("fixture.json")));
  CHECK(oracle.at("value").get<double>() == doctest::Approx(0.125));
  CHECK(oracle.at("method") == "brute-force");
}

TEST_CASE("spread matches the closed form and its estimator") {
  const coalition::Json exact =
      parse_report(run_cli("spread " + path("graph.json") + " --seeds 0,1"));
  CHECK(exact.at("value").get<double>() == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(exact.at("method") == "exact");

  const coalition::Json mc = parse_report(
      run_cli("spread " + path("graph.json") + " --seeds 0,1 --samples 100000 --seed 1"));
  CHECK(mc.at("method") == "monte_carlo");
  CHECK(std::fabs(mc.at("value").get<double>() - 0.75) < 0.01);
}

TEST_CASE("generators emit loadable game documents") {
  const RunResult sat = run_cli("gen sat " + path("sat.cnf"));
  REQUIRE(sat.exit_code == 0);
  const coalition::Json sat_doc = coalition::parse_json_text(sat.out);
  CHECK(sat_doc.at("n") == 6);
  CHECK(sat_doc.at("eta") == 7.5);
  CHECK(sat_doc.at("sat_threshold").get<double>() == doctest::Approx(0.65));
  CHECK_NOTHROW(coalition::game_from_json(sat_doc));

  const RunResult domset = run_cli("gen domset " + path("path.txt") + " --k 1");
  REQUIRE(domset.exit_code == 0);
  const coalition::Json domset_doc = coalition::parse_json_text(domset.out);
  CHECK(domset_doc.at("candidate").at("r").get<double>() == doctest::Approx(1.0 / 3.0));
  CHECK_NOTHROW(coalition::game_from_json(domset_doc));

  const coalition::Json cover = parse_report(
      run_shell(g_cli + " gen setcover " + path("cover.json") + " | " + g_cli + " adversarial -"));
  CHECK(cover.at("value").get<double>() == doctest::Approx(2.0));

  // -o writes the same bytes to a file.
  const RunResult to_file =
      run_cli("gen maxcut " + path("k3.txt") + " -o " + path("k3game.json"));
  REQUIRE(to_file.exit_code == 0);
  std::ifstream in(path("k3game.json"), std::ios::binary);
  std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(written == run_cli("gen maxcut " + path("k3.txt")).out);
}

TEST_CASE("oracle subcommand covers the graph and formula baselines") {
  CHECK(parse_report(run_cli("oracle max-cut " + path("k3.txt"))).at("value") == 2);
  CHECK(parse_report(run_cli("oracle min-domset " + path("path.txt"))).at("value") == 1);
  CHECK(parse_report(run_cli("oracle sat " + path("sat.cnf"))).at("value") == true);
  CHECK(parse_report(run_cli("oracle core-feasible " + path("additive.json"))).at("value") ==
        true);
  CHECK(parse_report(run_cli("oracle rlcv " + path("fixture.json"))).at("value").get<double>() ==
        doctest::Approx(0.25));
}

TEST_CASE("exit codes distinguish usage, parse, and limit failures") {
  CHECK(run_cli("no-such-command").exit_code == 1);
  CHECK(run_cli("rlcv " + path("fixture.json") + " --method bogus").exit_code == 1);
  CHECK(run_cli("ladv " + path("fixture.json") + " --method sgd").exit_code == 1);
  CHECK(run_cli("oracle wrong-quantity " + path("fixture.json")).exit_code == 1);

  CHECK(run_cli("rlcv " + path("no-such-file.json")).exit_code == 2);
  write_file("bad.json", "{ not json");
  CHECK(run_cli("rlcv " + path("bad.json")).exit_code == 2);
  write_file("bad_game.json", R"({"n": 2, "eta": 9, "profit": {"type": "additive",
      "weights": [1, 1]}})");
  CHECK(run_cli("core-check " + path("bad_game.json")).exit_code == 2);

  CHECK(run_shell("echo '{bad' | " + g_cli + " rlcv -").exit_code == 2);
  CHECK(run_shell("echo '{bad' | " + g_cli + " rlcv").exit_code == 2);  // default stdin
}

TEST_CASE("reports are byte-identical across runs up to the runtime field") {
  const std::string commands[] = {
      "rlcv " + path("fixture.json"), "alcv " + path("fixture.json") + " --method approx",
      "core-check " + path("additive.json"), "spread " + path("graph.json") + " --seeds 0"};
  for (const std::string& cmd : commands) {
    CAPTURE(cmd);
    CHECK(strip_runtime(run_cli(cmd)) == strip_runtime(run_cli(cmd)));
  }
}

int main(int argc, char** argv) {
  if (argc < 2 || argv[1][0] == '-') {
    std::fprintf(stderr, "usage: test_cli <path-to-cli-binary> [doctest args]\n");
    return 64;
  }
  g_cli = argv[1];

  char scratch[] = "/tmp/coalition_cli_XXXXXX";
  if (mkdtemp(scratch) == nullptr) return 65;
  g_dir = scratch;
  write_file("fixture.json",
             R"({"n": 2, "eta": 0, "profit": {"type": "table", "values": [0, 1, 1, 1.5]}})");
  write_file("additive.json",
             R"({"n": 3, "eta": 0, "profit": {"type": "additive", "weights": [1, 2, 3]}})");
  write_file("graph.json",
             R"({"seeds": [0, 1], "targets": [2], "edges": [[0, 2, 0.5], [1, 2, 0.5]]})");
  write_file("k3.txt", "3\n0 1\n1 2\n0 2\n");
  write_file("path.txt", "3\n0 1\n1 2\n");
  write_file("sat.cnf", "p cnf 1 5\n1 0\n1 0\n1 0\n1 0\n1 0\n");
  write_file("cover.json", R"({"universe": ["a", "b"], "collection": [["a"], ["b"]], "M": 2.0})");

  doctest::Context context;
  context.applyCommandLine(argc - 1, argv + 1);
  return context.run();
}
