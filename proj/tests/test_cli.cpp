#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "flowdec_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run_cli(const std::string& args) {
  const fs::path out = work_dir() / "stdout.txt";
  const fs::path err = work_dir() / "stderr.txt";
  const std::string command = std::string(FLOWDEC_CLI_PATH) + " " + args +
                              " > " + out.string() + " 2> " + err.string();
  const int status = std::system(command.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(out), slurp(err)};
}

std::string path_of(const std::string& name) {
  return (work_dir() / name).string();
}

}  // namespace

TEST_CASE("generate, solve, verify round trip") {
  const auto gen = run_cli(
      "generate --rows 3 --cols 3 --horizon 2 --fleets 2 --fleet-size 1 "
      "--objects 2 --seed 7 --out " +
      path_of("i.json"));
  REQUIRE(gen.exit_code == 0);

  const auto solve = run_cli("solve --algorithm flowdec --in " +
                             path_of("i.json") + " --out " + path_of("a.json"));
  REQUIRE(solve.exit_code == 0);

  // The printed value matches the reward recorded in the written file.
  const ordered_json solution = ordered_json::parse(slurp(path_of("a.json")));
  CHECK(std::stod(solve.out) ==
        doctest::Approx(solution["reward"].get<double>()).epsilon(1e-12));

  const auto verify = run_cli("verify --instance " + path_of("i.json") +
                              " --solution " + path_of("a.json"));
  CHECK(verify.exit_code == 0);

  for (const char* algorithm : {"private-first", "shared-first", "oracle"}) {
    const auto other =
        run_cli(std::string("solve --algorithm ") + algorithm + " --in " +
                path_of("i.json") + " --out " + path_of("b.json"));
    REQUIRE(other.exit_code == 0);
    CHECK(run_cli("verify --instance " + path_of("i.json") + " --solution " +
                  path_of("b.json"))
              .exit_code == 0);
  }
}

TEST_CASE("tampered duplicate shared claim fails verification naming 1f") {
  REQUIRE(run_cli("generate --rows 2 --cols 2 --horizon 2 --fleets 2 "
                  "--fleet-size 2 --objects 2 --seed 3 --out " +
                  path_of("i2.json"))
              .exit_code == 0);
  REQUIRE(run_cli("solve --algorithm flowdec --in " + path_of("i2.json") +
                  " --out " + path_of("a2.json"))
              .exit_code == 0);

  ordered_json solution = ordered_json::parse(slurp(path_of("a2.json")));
  // Duplicate the first shared claim under the other fleet label. If there
  // is no claim, fabricate a pair on a vertex with agents from both fleets.
  ordered_json claim;
  if (!solution["y"].empty()) {
    claim = solution["y"][0];
    claim["f"] = claim["f"].get<int>() == 1 ? 2 : 1;
  } else {
    claim = {{"f", 1}, {"tau", 0}, {"j", 0}};
    solution["y"].push_back(claim);
    claim["f"] = 2;
  }
  solution["y"].push_back(claim);
  std::ofstream(path_of("tampered.json")) << solution.dump(2);

  const auto verify = run_cli("verify --instance " + path_of("i2.json") +
                              " --solution " + path_of("tampered.json"));
  CHECK(verify.exit_code == 1);
  CHECK(verify.out.find("1f") != std::string::npos);
}

TEST_CASE("oracle refuses oversized instances with exit code 3") {
  REQUIRE(run_cli("generate --rows 10 --cols 10 --horizon 16 --fleets 2 "
                  "--fleet-size 5 --objects 3 --seed 1 --out " +
                  path_of("big.json"))
              .exit_code == 0);
  const auto refused =
      run_cli("solve --algorithm oracle --in " + path_of("big.json"));
  CHECK(refused.exit_code == 3);
  CHECK(refused.err.find("exceeds") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("generate --rows 3 --cols 3").exit_code == 2);  // no --out
  const auto bad_rows = run_cli("generate --rows 0 --out " + path_of("x.json"));
  CHECK(bad_rows.exit_code == 2);
  CHECK(bad_rows.err.find("--rows") != std::string::npos);
  CHECK(run_cli("solve --algorithm flowdec --in " + path_of("missing.json"))
            .exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("benchmark emits one row per cell and is seed-reproducible") {
  const std::string flags =
      "benchmark --grid 3 --horizons 2 3 --fleets 1 2 --fleet-size 1 "
      "--repeats 2 --seed 11 --with-oracle --out ";
  REQUIRE(run_cli(flags + path_of("bench1.csv")).exit_code == 0);
  REQUIRE(run_cli(flags + path_of("bench2.csv")).exit_code == 0);

  std::vector<std::vector<std::string>> rows;
  std::istringstream csv(slurp(path_of("bench1.csv")));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "T,F,a,n,algorithm,runtime_ms,value,oracle_value,approx_ratio");
  while (std::getline(csv, line)) {
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    fields.resize(9);
    rows.push_back(std::move(fields));
  }
  CHECK(rows.size() == 2 * 2 * 2);  // horizons x fleets x repeats, flowdec only

  for (const auto& fields : rows) {
    CHECK(fields[4] == "flowdec");
    REQUIRE_FALSE(fields[8].empty());  // oracle small enough everywhere here
    const double ratio = std::stod(fields[8]);
    const double fleets = std::stod(fields[1]);
    CHECK(ratio >= fleets / (2 * fleets - 1) - 1e-9);
    CHECK(ratio <= 1.0 + 1e-9);
  }

  // Same flags and seed: identical value columns (runtimes may differ).
  auto values = [](const std::string& text) {
    std::vector<std::string> out;
    std::istringstream stream(text);
    std::string row;
    std::getline(stream, row);
    while (std::getline(stream, row)) {
      std::vector<std::string> fields;
      std::istringstream ls(row);
      std::string field;
      while (std::getline(ls, field, ',')) fields.push_back(field);
      out.push_back(fields[6]);
    }
    return out;
  };
  CHECK(values(slurp(path_of("bench1.csv"))) ==
        values(slurp(path_of("bench2.csv"))));
}

TEST_CASE("parallel benchmark cells are flagged in the CSV") {
  REQUIRE(run_cli("benchmark --grid 3 --horizons 2 --fleets 2 --fleet-size 1 "
                  "--repeats 2 --seed 4 --parallel --out " +
                  path_of("par.csv"))
              .exit_code == 0);
  const std::string csv = slurp(path_of("par.csv"));
  CHECK(csv.rfind("#", 0) == 0);
  CHECK(csv.find("unreliable") != std::string::npos);
}

TEST_CASE("simulate writes one record per step") {
  const auto sim = run_cli(
      "simulate --rows 3 --cols 3 --horizon 2 --fleets 2 --fleet-size 1 "
      "--objects 1 --seed 5 --steps 5 --planner flowdec --out " +
      path_of("sim.json") + " --csv " + path_of("sim.csv"));
  REQUIRE(sim.exit_code == 0);
  const ordered_json report = ordered_json::parse(slurp(path_of("sim.json")));
  CHECK(report["steps"].size() == 5);
  std::istringstream csv(slurp(path_of("sim.csv")));
  int lines = 0;
  std::string line;
  while (std::getline(csv, line)) ++lines;
  CHECK(lines == 6);  // header + 5 records
}

TEST_CASE("debug network dump renders DOT") {
  REQUIRE(run_cli("generate --rows 2 --cols 2 --horizon 2 --fleets 2 "
                  "--fleet-size 1 --objects 1 --seed 2 --out " +
                  path_of("i3.json"))
              .exit_code == 0);
  REQUIRE(run_cli("solve --algorithm flowdec --in " + path_of("i3.json") +
                  " --debug-network " + path_of("nets.dot"))
              .exit_code == 0);
  const std::string dot = slurp(path_of("nets.dot"));
  CHECK(dot.find("digraph \"private_first_fleet1\"") != std::string::npos);
  CHECK(dot.find("digraph \"shared_first_pooled\"") != std::string::npos);
}
